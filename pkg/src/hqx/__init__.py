"""Vertex isoperimetry, extra connectivity and fault structure of hypercubes."""

from .errors import (
    BudgetExceeded,
    DomainError,
    HqxError,
    PreconditionError,
    RangeError,
)
from .hypercube import (
    ComponentProfile,
    FaultSet,
    common_neighbors,
    components,
    decompose,
    neighbors,
    vertex_boundary,
)
from .isoperimetry import (
    CascadeRep,
    boundary_cascade,
    boundary_closed_form,
    cascade_decompose,
    compare_cascade,
    dimension_difference,
    min_boundary,
    plateau_identities,
    witness_set,
)
from .oracle import (
    adversarial_trials,
    extra_conn_bruteforce,
    min_boundary_bruteforce,
    structure_trials,
)
from .reliability import (
    extra_conn_table,
    extra_connectivity,
    f_of_h,
    structure_check,
)

__version__ = "0.1.0"
