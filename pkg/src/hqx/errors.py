"""Exception types shared across the package."""


class HqxError(Exception):
    """Base class for every error raised by hqx."""


class DomainError(HqxError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class RangeError(HqxError, ValueError):
    """A parameter falls outside the range where a result is licensed."""


class PreconditionError(HqxError, ValueError):
    """A caller-side precondition does not hold (e.g. fault set too large)."""


class BudgetExceeded(HqxError, RuntimeError):
    """An exhaustive search would examine more candidates than allowed."""

    def __init__(self, needed, budget):
        self.needed = needed
        self.budget = budget
        super().__init__(
            f"enumeration needs {needed} candidates, budget is {budget}"
        )
