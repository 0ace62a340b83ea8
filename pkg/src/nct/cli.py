"""nct command line: gamma brackets, family verification, catalog listings,
extremal searches, exceptional-structure reports and ratio tables.

Exit status: 0 ok, 1 usage, 2 failed verification, 3 infeasible model,
4 time budget exhausted (partial rows are still written).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from .addcomb import (
    COPRIME_CUBE_FREE,
    COPRIME_SUM_FREE,
    DEGENERATE_CUBE_EVEN_FREE,
    DEGENERATE_CUBE_FREE,
    RESTRICTED_TRIPLE_FREE,
    ExtremalProblem,
    max_extremal,
)
from .arith import is_prime
from .bounds import VerificationFailure, gamma_bracket, limits_row
from .catalog import primitive_catalog
from .exceptional import classify_degenerate_cubes, classify_restricted_triples
from .families import (
    PROVENANCES,
    FamilyNotApplicable,
    applicable_provenances,
    build_family,
    family_size_formula,
    verify_family,
)
from .setcover import InfeasibleCover

SCHEMA = "nct-schema=1"

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_INFEASIBLE, EXIT_BUDGET = 0, 1, 2, 3, 4

COMMANDS = ("gamma", "verify", "catalog", "sumfree", "cubefree", "triples", "limits")

SUM_VARIANTS = {
    "coprime": COPRIME_SUM_FREE,
    "restricted": RESTRICTED_TRIPLE_FREE,
    COPRIME_SUM_FREE: COPRIME_SUM_FREE,
    RESTRICTED_TRIPLE_FREE: RESTRICTED_TRIPLE_FREE,
}
CUBE_VARIANTS = {
    "coprime": COPRIME_CUBE_FREE,
    "degenerate": DEGENERATE_CUBE_FREE,
    "even": DEGENERATE_CUBE_EVEN_FREE,
    COPRIME_CUBE_FREE: COPRIME_CUBE_FREE,
    DEGENERATE_CUBE_FREE: DEGENERATE_CUBE_FREE,
    DEGENERATE_CUBE_EVEN_FREE: DEGENERATE_CUBE_EVEN_FREE,
}
TRIPLE_VARIANTS = ("restricted", "cubes")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    ns: list[int]
    group: str = "S"
    variant: str | None = None
    provenance: str | None = None
    fmt: str = "json"
    budget: float | None = None
    verify_budget: float | None = None
    jobs: int = 1
    no_verify: bool = False
    items: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if not self.ns:
            raise UsageError("empty range of n")
        if self.budget is not None and self.budget <= 0:
            raise UsageError("budget must be positive")
        if self.verify_budget is not None and self.verify_budget <= 0:
            raise UsageError("verify budget must be positive")
        if self.jobs < 1:
            raise UsageError("--jobs must be a positive integer")
        if self.fmt not in ("json", "csv"):
            raise UsageError(f"unknown format {self.fmt!r}")
        if self.group not in ("S", "A"):
            raise UsageError(f"group must be S or A, got {self.group!r}")


@dataclass
class _Outcome:
    rows: list[dict]
    status: int = EXIT_OK
    message: str | None = None


# one task per n; each returns rows plus the worst status it hit

def _gamma(cfg: RunConfig, n: int) -> _Outcome:
    b = gamma_bracket(
        n,
        cfg.group,
        verify=not cfg.no_verify,
        time_budget=cfg.budget,
        verify_budget=cfg.verify_budget,
    )
    status = EXIT_OK if b.lower_certified else EXIT_BUDGET
    return _Outcome([b.to_row()], status)


def _verify(cfg: RunConfig, n: int) -> _Outcome:
    provs = [cfg.provenance] if cfg.provenance else applicable_provenances(n, cfg.group)
    rows, status = [], EXIT_OK
    for prov in provs:
        f = build_family(prov, n, cfg.group)
        rep = verify_family(f, time_budget=cfg.budget)
        bound, exact = family_size_formula(prov, n)
        row = {"n": n, "group": cfg.group, "provenance": prov, "size": f.size, "formula_bound": bound, "formula_exact": exact}
        row.update(rep.to_row())
        rows.append(row)
        if not rep.covered:
            status = EXIT_VERIFY
        elif not rep.complete and status == EXIT_OK:
            status = EXIT_BUDGET
    return _Outcome(rows, status)


def _catalog(cfg: RunConfig, n: int) -> _Outcome:
    entries, valid = primitive_catalog(n)
    rows = []
    for e in entries:
        row = {"n": n}
        row.update(e.to_row())
        row["valid"] = valid
        rows.append(row)
    return _Outcome(rows)


def _extremal(cfg: RunConfig, n: int) -> _Outcome:
    p = ExtremalProblem(cfg.variant, n)
    r = max_extremal(p, time_budget=cfg.budget)
    return _Outcome([r.to_row(p)], EXIT_OK if r.certified else EXIT_BUDGET)


def _triples(cfg: RunConfig, n: int) -> _Outcome:
    if cfg.variant == "cubes":
        rep = classify_degenerate_cubes(n, cfg.group)
    else:
        rep = classify_restricted_triples(n)
    return _Outcome(rep.to_rows() if cfg.items else [rep.summary()])


def _limits(cfg: RunConfig, n: int) -> _Outcome:
    row = limits_row(n, cfg.group, time_budget=cfg.budget, verify_budget=cfg.verify_budget)
    return _Outcome([row], EXIT_OK if row["lower_certified"] else EXIT_BUDGET)


HANDLERS = {
    "gamma": _gamma,
    "verify": _verify,
    "catalog": _catalog,
    "sumfree": _extremal,
    "cubefree": _extremal,
    "triples": _triples,
    "limits": _limits,
}


def _task(cfg: RunConfig, n: int) -> _Outcome:
    try:
        return HANDLERS[cfg.command](cfg, n)
    except VerificationFailure as e:
        return _Outcome([], EXIT_VERIFY, str(e))
    except InfeasibleCover as e:
        return _Outcome([], EXIT_INFEASIBLE, str(e))
    except (FamilyNotApplicable, ValueError) as e:
        return _Outcome([], EXIT_USAGE, f"n={n}: {e}")


# usage beats every other failure; otherwise the highest code wins
def _combine(a: int, b: int) -> int:
    if EXIT_USAGE in (a, b):
        return EXIT_USAGE
    return max(a, b)


def render(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    buf.write(f"# {SCHEMA}\n")
    if rows:
        fields = list(rows[0])
        for r in rows[1:]:
            fields += [k for k in r if k not in fields]
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: _cell(r.get(k)) for k in fields})
    return buf.getvalue()


def _cell(v):
    if isinstance(v, (list, dict, tuple)):
        return json.dumps(v, separators=(",", ":"))
    if v is None:
        return ""
    return v


def run(cfg: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    task = partial(_task, cfg)
    if cfg.jobs > 1 and len(cfg.ns) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            outcomes = list(pool.map(task, cfg.ns))
    else:
        outcomes = [task(n) for n in cfg.ns]
    rows, status = [], EXIT_OK
    for o in outcomes:
        rows += o.rows
        status = _combine(status, o.status)
        if o.message:
            print(f"nct: {o.message}", file=sys.stderr)
    out.write(render(rows, cfg.fmt))
    return status


def _n_values(args) -> list[int]:
    if args.n is not None:
        if args.min is not None or args.max is not None:
            raise UsageError("use either --n or --min/--max, not both")
        ns = [args.n]
    else:
        if args.min is None or args.max is None:
            raise UsageError("give --n or both --min and --max")
        if args.min > args.max:
            raise UsageError(f"empty range [{args.min}, {args.max}]")
        ns = list(range(args.min, args.max + 1))
    step = args.step
    if step == "p":
        ns = [n for n in ns if is_prime(n)]
    elif step == "2p":
        ns = [n for n in ns if n % 2 == 0 and is_prime(n // 2)]
    elif step is not None:
        try:
            k = int(step)
        except ValueError:
            raise UsageError(f"--step must be an integer, 'p' or '2p', got {step!r}") from None
        if k < 1:
            raise UsageError("--step must be positive")
        ns = [n for n in ns if (n - ns[0]) % k == 0] if ns else ns
    if args.parity == "even":
        ns = [n for n in ns if n % 2 == 0]
    elif args.parity == "odd":
        ns = [n for n in ns if n % 2 == 1]
    return ns


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="nct", description="Normal covering numbers of S_n and A_n, and related extremal problems.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, group=True):
        p.add_argument("--n", type=int)
        p.add_argument("--min", type=int)
        p.add_argument("--max", type=int)
        p.add_argument("--step", help="integer stride, 'p' (primes) or '2p' (twice a prime)")
        p.add_argument("--parity", choices=("even", "odd", "all"), default="all")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--budget", type=float, help="seconds per search (default $NCT_TIME_BUDGET)")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--out")
        if group:
            p.add_argument("--group", choices=("S", "A"), default="S")

    p = sub.add_parser("gamma", help="bracket for gamma(G)")
    common(p)
    p.add_argument("--no-verify", action="store_true", help="skip verifying the upper family")
    p.add_argument("--verify-budget", type=float)

    p = sub.add_parser("verify", help="check covering families against all cycle types")
    common(p)
    p.add_argument("--provenance", choices=PROVENANCES[:-1])

    p = sub.add_parser("catalog", help="primitive exceptional cycle types")
    common(p, group=False)

    p = sub.add_parser("sumfree", help="largest symmetric coprime-sum-free sets")
    common(p, group=False)
    p.add_argument("--variant", choices=sorted(SUM_VARIANTS), default="coprime")

    p = sub.add_parser("cubefree", help="largest symmetric coprime-cube-free sets")
    common(p, group=False)
    p.add_argument("--variant", choices=sorted(CUBE_VARIANTS), default="coprime")

    p = sub.add_parser("triples", help="exceptional restricted triples or degenerate cubes")
    common(p)
    p.add_argument("--variant", choices=TRIPLE_VARIANTS, default="restricted")
    p.add_argument("--items", action="store_true", help="one row per item instead of a summary")

    p = sub.add_parser("limits", help="ratio table gamma/n")
    common(p)
    p.add_argument("--verify-budget", type=float, default=1.0)
    return ap


def config_from_args(args) -> RunConfig:
    budget = args.budget
    if budget is None and os.environ.get("NCT_TIME_BUDGET"):
        try:
            budget = float(os.environ["NCT_TIME_BUDGET"])
        except ValueError:
            raise UsageError(f"NCT_TIME_BUDGET is not a number: {os.environ['NCT_TIME_BUDGET']!r}") from None
    variant = getattr(args, "variant", None)
    if args.command == "sumfree":
        variant = SUM_VARIANTS[variant]
    elif args.command == "cubefree":
        variant = CUBE_VARIANTS[variant]
    return RunConfig(
        command=args.command,
        ns=_n_values(args),
        group=getattr(args, "group", "S"),
        variant=variant,
        provenance=getattr(args, "provenance", None),
        fmt=args.format,
        budget=budget,
        verify_budget=getattr(args, "verify_budget", None),
        jobs=args.jobs,
        no_verify=getattr(args, "no_verify", False),
        items=getattr(args, "items", False),
    )


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:  # --help, or a usage error already reported
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        cfg = config_from_args(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"nct: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", newline="") as fh:
            return run(cfg, fh)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
