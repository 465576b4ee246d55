"""Command-line driver: ``hqx boundary|extraconn|verify|witness``.

Exit codes: 0 success, 1 a checked claim failed, 2 usage or guard error,
3 enumeration budget exceeded.  Output goes to stdout as CSV (header row,
fixed column order) or JSON; timing goes to stderr so that identical
invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from . import hypercube as hc
from . import isoperimetry as iso
from . import oracle
from . import reliability as rel
from .errors import BudgetExceeded, HqxError

SCHEMA_VERSION = "1.0"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(HqxError):
    pass


def parse_range(text):
    """Parse ``a..b`` (inclusive) or a single integer into ``(a, b)``."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer range: {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range: {text!r}")
    return lo, hi


def label(n, v):
    return format(v, f"0{n}b")


def budget_from_env(flag):
    if flag is not None:
        return flag
    env = os.environ.get("HQX_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"HQX_BUDGET is not an integer: {env!r}")
    return oracle.DEFAULT_BUDGET


def emit(record, fmt, out):
    if fmt == "json":
        out.write(json.dumps(record, indent=2) + "\n")
        return
    rows = record["rows"]
    buf = io.StringIO()
    if rows:
        writer = csv.writer(buf, lineterminator="\n")
        columns = list(rows[0])
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_csv_cell(row[c]) for c in columns])
    out.write(buf.getvalue())


def _csv_cell(value):
    if value is None:
        return "n/a"
    if isinstance(value, bool):
        return "ok" if value else "FAIL"
    if isinstance(value, (list, tuple)):
        return " ".join(str(x) for x in value)
    return value


def record(command, params, rows, summary):
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": params,
        "rows": rows,
        "summary": summary,
    }


# -- commands -------------------------------------------------------------

def cmd_boundary(args):
    n = args.n
    lo, hi = args.m
    hc.check_dim(n, cap=None)
    if lo < 1 or hi > (1 << n) - 1:
        raise UsageError(f"m range {lo}..{hi} is outside 1..{(1 << n) - 1}")
    rows = []
    agree = True
    for m in range(lo, hi + 1):
        value = iso.min_boundary(n, m)
        closed = None
        ok = None
        if iso.closed_form_row(n, m) is not None:
            closed = iso.boundary_closed_form(n, m).value
            ok = closed == value
            agree &= ok
        rows.append({"m": m, "cascade": value, "closed_form": closed, "agree": ok})
    params = {"n": n, "m": [lo, hi]}
    summary = {"rows": len(rows), "all_agree": agree}
    return record("boundary", params, rows, summary), agree


def cmd_extraconn(args):
    n = args.n
    if n < 5:
        raise UsageError(f"extraconn needs n >= 5, got {n}")
    table = {e.h: e for e in rel.extra_conn_table(n)}
    rows = []
    for h in range(1, 3 * n - 5):
        e = table.get(h)
        if e is None:
            rows.append({"h_minus_1": h - 1, "h": h, "value": None,
                         "row": "gap", "order": None, "guard": None})
        else:
            rows.append({"h_minus_1": h - 1, "h": h, "value": e.value,
                         "row": f"row{int(e.formula_row)}", "order": e.order,
                         "guard": e.guard})
    summary = {"licensed": len(table), "gaps": rel.extra_conn_gaps(n)}
    return record("extraconn", {"n": n}, rows, summary), True


def cmd_witness(args):
    n, m = args.n, args.m
    w = iso.witness_set(n, m)
    boundary = hc.vertex_boundary(n, w.vertices).size
    target = iso.min_boundary(n, m)
    ok = boundary == target
    row = {
        "n": n, "m": m, "family": w.family.value,
        "boundary": boundary, "target": target, "ok": ok,
        "vertices": [label(n, v) for v in iso.witness_labels(n, m)],
    }
    return record("witness", {"n": n, "m": m}, [row], {"ok": ok}), ok


def _verify_boundary_oracle(args):
    n = _need(args.n, "--n")
    lo, hi = args.m if args.m else (1, (1 << n) - 1)
    budget = budget_from_env(args.budget)
    rows = []
    for m in range(lo, hi + 1):
        res = oracle.min_boundary_bruteforce(n, m, budget=budget)
        cascade = iso.min_boundary(n, m)
        rows.append({"m": m, "oracle": res.value, "cascade": cascade,
                     "explored": res.explored, "match": res.value == cascade})
    matches = sum(r["match"] for r in rows)
    summary = {"matches": matches, "total": len(rows), "budget": budget}
    params = {"n": n, "m": [lo, hi], "budget": budget}
    return record("verify boundary-oracle", params, rows, summary), matches == len(rows)


def _verify_extraconn_oracle(args):
    n = _need(args.n, "--n")
    lo, hi = args.h if args.h else (1, 2)
    budget = budget_from_env(args.budget)
    rows = []
    ok = True
    for h in range(lo, hi + 1):
        res = oracle.extra_conn_bruteforce(n, h - 1, budget=budget)
        try:
            theorem = rel.extra_connectivity(n, h - 1).value
        except HqxError:
            theorem = None
        match = None if theorem is None else res.value == theorem
        ok &= match is not False and res.value is not None
        rows.append({
            "h_minus_1": h - 1, "oracle": res.value, "theorem": theorem,
            "match": match, "explored": res.explored,
            "witness": [label(n, v) for v in res.witness] if res.witness else None,
        })
    params = {"n": n, "h": [lo, hi], "budget": budget}
    summary = {"all_pass": ok, "budget": budget}
    return record("verify extraconn-oracle", params, rows, summary), ok


def _verify_structure(args):
    n = _need(args.n, "--n")
    lo, hi = args.h if args.h else (1, 3 * n - 6)
    samplers = ["uniform", "adversarial"] if args.sampler == "both" else [args.sampler]
    rows = []
    for h in range(lo, hi + 1):
        if args.h is None and not rel.structure_licensed(n, h):
            continue
        for sampler in samplers:
            run = oracle.structure_trials if sampler == "uniform" else oracle.adversarial_trials
            rep = run(n, h, args.trials, args.seed, workers=args.workers)
            rows.append({
                "n": n, "h": h, "sampler": sampler, "trials": rep.trials,
                "seed": rep.seed, "bound": rep.bound, "violations": rep.violations,
                "worst_small_total": rep.worst_small_total,
                "tight_hits": rep.tight_hits,
            })
    violations = sum(r["violations"] for r in rows)
    params = {"n": n, "h": [lo, hi], "trials": args.trials, "seed": args.seed,
              "sampler": args.sampler}
    summary = {"violations": violations, "checks": len(rows)}
    return record("verify structure", params, rows, summary), violations == 0


def _n_span(args):
    if args.n is not None:
        return args.n, args.n
    return args.n_min, args.n_max


def _verify_plateaus(args):
    lo, hi = _n_span(args)
    rows = []
    for n in range(lo, hi + 1):
        for c in iso.plateau_identities(n):
            rows.append({"n": n, "claim": c.claim, "param": c.param,
                         "orders": list(c.orders), "values": list(c.values),
                         "passed": c.passed})
    failed = sum(not r["passed"] for r in rows)
    summary = {"claims": len(rows), "failed": failed}
    return record("verify plateaus", {"n": [lo, hi]}, rows, summary), failed == 0


def _verify_differences(args):
    lo, hi = _n_span(args)
    rows = []
    for n in range(lo, hi + 1):
        for h in range(2, 2 * n):
            d = iso.dimension_difference(n, h)
            expected = n - 1 if h <= n + 1 else h - 2
            rows.append({"n": n, "h": h, "difference": d,
                         "expected": expected, "passed": d == expected})
    failed = sum(not r["passed"] for r in rows)
    summary = {"checks": len(rows), "failed": failed}
    return record("verify differences", {"n": [lo, hi]}, rows, summary), failed == 0


_VERIFY = {
    "boundary-oracle": _verify_boundary_oracle,
    "extraconn-oracle": _verify_extraconn_oracle,
    "structure": _verify_structure,
    "plateaus": _verify_plateaus,
    "differences": _verify_differences,
}


def cmd_verify(args):
    return _VERIFY[args.kind](args)


def _need(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required for this check")
    return value


# -- parser ---------------------------------------------------------------

def build_parser():
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("csv", "json"), default="csv")

    parser = argparse.ArgumentParser(
        prog="hqx",
        description="Vertex isoperimetry and extra connectivity of hypercubes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("boundary", parents=[fmt],
                       help="tabulate b_v(m; Q_n) from cascade and closed form")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=parse_range, required=True, help="a..b or a single m")
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("extraconn", parents=[fmt],
                       help="table of licensed (h-1)-extra connectivities")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_extraconn)

    p = sub.add_parser("witness", parents=[fmt],
                       help="list an extremal witness set and its boundary")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", parents=[fmt], help="run an oracle or identity check")
    p.add_argument("kind", choices=sorted(_VERIFY))
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=parse_range)
    p.add_argument("--h", type=parse_range)
    p.add_argument("--n-min", type=int, default=5)
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sampler", choices=("uniform", "adversarial", "both"),
                   default="uniform")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    started = time.perf_counter()
    try:
        rec, ok = args.func(args)
    except BudgetExceeded as exc:
        print(f"hqx: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except HqxError as exc:
        print(f"hqx: {exc}", file=sys.stderr)
        return EXIT_USAGE
    emit(rec, args.format, out)
    print(f"elapsed: {time.perf_counter() - started:.3f}s", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
