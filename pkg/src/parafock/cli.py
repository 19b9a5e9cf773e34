"""Command-line interface.

Subcommands: schur, hook-schur, w1, cohomology, branch, dims, verify.

Conventions shared by all commands: variables are ordered even block first
(1..n) then odd block (n+1..n+m); polynomial JSON lists terms as
{"exp": [...], "coef": "..."} with exponents in half units (an entry 2c
means exponent c) in graded-lexicographic order; partitions are JSON int
arrays.  Output is deterministic: identical argv gives byte-identical
output (report timings are zeroed unless --timings is passed).

Exit codes: 0 success (or non-strict verification), 1 identity failure
under --strict, 2 usage or computation error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .kostant import (
    branching_character,
    cohomology_via_partitions,
    cohomology_via_w1,
    verify_parafermion_identity,
    verify_paraboson_identity,
    verify_parastat_identity,
    verify_weyl_character,
)
from .partitions import Partition, enumerate_partitions
from .schur import SchurContext, hook_schur, schur
from .weyl import (
    ALTERNANT_RANK_LIMIT,
    RootSystemB,
    Weight,
    dim_gl,
    dim_so,
    phi_sigma,
    w1_element,
)

DEGREE_ENV = "PARAFOCK_DEGREE"
DEFAULT_DEGREES = {"paraboson": 10, "parastat": 8}


def _parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "0"):
        return Partition()
    try:
        return Partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}: {exc}") from exc


def _parse_range(text: str) -> list[int]:
    """A single integer, or an inclusive range like 1..3."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _print_poly(poly, fmt: str) -> None:
    if fmt == "json":
        print(_dump(poly.to_json_obj()))
    else:
        print("exp\tcoef")
        for e, c in poly.sorted_terms():
            print(f"{','.join(map(str, e))}\t{c}")


def _check_rank_limit(args, *values) -> None:
    limit = ALTERNANT_RANK_LIMIT
    if getattr(args, "force", False):
        return
    for v in values:
        if v is not None and v > limit:
            raise ValueError(
                f"rank {v} exceeds the safety limit {limit}; pass --force to override"
            )


def _cmd_schur(args) -> int:
    lam = _parse_partition(args.lam)
    ctx = SchurContext(args.n, args.m)
    _print_poly(schur(lam, ctx, args.algorithm), args.format)
    return 0


def _cmd_hook_schur(args) -> int:
    lam = _parse_partition(args.lam)
    ctx = SchurContext(args.n, args.m)
    _print_poly(hook_schur(lam, ctx, args.algorithm), args.format)
    return 0


def _cmd_w1(args) -> int:
    _check_rank_limit(args, args.n)
    n = args.n
    rs = RootSystemB(n)
    rows = []
    from itertools import combinations

    for r in range(n + 1):
        for I in combinations(range(1, n + 1), r):
            sigma = w1_element(I, n)
            phis = phi_sigma(sigma, rs)
            mu = (
                kostant_weight_diagram(sigma, n, 0)
            )
            rows.append(
                {
                    "I": list(I),
                    "word": list(sigma.word),
                    "signs": list(sigma.signs),
                    "num_phi": len(phis),
                    "mu": mu.to_json(),
                }
            )
    if args.format == "json":
        print(_dump(rows))
    else:
        print("I\tword\tsigns\tnum_phi\tmu")
        for row in rows:
            print(
                "\t".join(
                    [
                        ",".join(map(str, row["I"])),
                        ",".join(map(str, row["word"])),
                        ",".join(map(str, row["signs"])),
                        str(row["num_phi"]),
                        ",".join(map(str, row["mu"])),
                    ]
                )
            )
    return 0


def kostant_weight_diagram(sigma, n: int, p: int) -> Partition:
    """Dominant diagram of sigma(rho + p theta) - rho after reflection."""
    from .weyl import kostant_weight

    w = kostant_weight(sigma, Weight.p_theta(n, p), n)
    return (w.reversed_negated() + Weight.p_theta(n, p)).to_partition()


def _cmd_cohomology(args) -> int:
    _check_rank_limit(args, args.n)
    route = cohomology_via_w1 if args.route == "w1" else cohomology_via_partitions
    table = route(args.n, args.p)
    if args.format == "json":
        print(_dump(table.to_json_obj()))
    else:
        print("k\tmu\tsource_kind\tsource")
        for e in table.entries:
            if isinstance(e.source, Partition):
                kind, src = "mu", ",".join(map(str, e.source.parts))
            else:
                kind, src = "I", ",".join(map(str, e.source))
            print(f"{e.k}\t{','.join(map(str, e.diagram.parts))}\t{kind}\t{src}")
    return 0


def _cmd_branch(args) -> int:
    _check_rank_limit(args, args.n)
    _print_poly(branching_character(args.n, args.p), args.format)
    return 0


def _cmd_dims(args) -> int:
    n, p = args.n, args.p
    rows = []
    total = 0
    for lam in enumerate_partitions(max_part=p, max_length=n):
        d = dim_gl(lam, n)
        rows.append({"lambda": lam.to_json(), "dim": d})
        total += d
    so_dim = dim_so(Weight.p_theta(n, p), n)
    out = {
        "n": n,
        "p": p,
        "dim_so": so_dim,
        "sum_dim_gl": total,
        "match": so_dim == total,
        "by_lambda": rows,
    }
    if args.format == "json":
        print(_dump(out))
    else:
        for row in rows:
            print(f"lambda:{','.join(map(str, row['lambda']))}\t{row['dim']}")
        print(f"sum_dim_gl\t{total}")
        print(f"dim_so\t{so_dim}")
        print(f"match\t{'true' if out['match'] else 'false'}")
    return 0


def _default_degree(identity: str, args) -> int:
    if args.degree is not None:
        return args.degree
    env = os.environ.get(DEGREE_ENV)
    if env is not None:
        try:
            value = int(env)
        except ValueError as exc:
            raise ValueError(f"{DEGREE_ENV} must be an integer, got {env!r}") from exc
        if value < 0:
            raise ValueError(f"{DEGREE_ENV} must be >= 0, got {value}")
        return value
    return DEFAULT_DEGREES.get(identity, 10)


def _cmd_verify(args) -> int:
    identity = args.identity
    ns = _parse_range(args.n)
    ps = _parse_range(args.p)
    ms = _parse_range(args.m) if args.m is not None else [None]
    if identity == "parastat" and args.m is None:
        raise ValueError("parastat needs --m")
    _check_rank_limit(args, max(ns), max(ms) if ms != [None] else None)
    for v, name in ((min(ns), "--n"), (min(ps), "--p")):
        if v < 0:
            raise ValueError(f"{name} must be >= 0")
    if identity in ("parafermion", "paraboson", "weyl-character") and min(ns) < 1:
        raise ValueError("--n must be >= 1")

    reports = []
    for n in ns:
        for m in ms:
            for p in ps:
                if identity == "parafermion":
                    reports.append(verify_parafermion_identity(n, p))
                elif identity == "weyl-character":
                    max_rank = n if args.force else ALTERNANT_RANK_LIMIT
                    reports.append(verify_weyl_character(n, p, max_rank))
                elif identity == "paraboson":
                    D = _default_degree(identity, args)
                    reports.append(verify_paraboson_identity(n, p, D, "printed"))
                    if args.alt_denominator:
                        reports.append(
                            verify_paraboson_identity(n, p, D, "symmetric")
                        )
                elif identity == "parastat":
                    D = _default_degree(identity, args)
                    reports.append(verify_parastat_identity(n, m, p, D))
    failed = any(not r.passed for r in reports)
    if args.format == "json":
        for r in reports:
            obj = r.to_json_obj()
            if not args.timings:
                obj["millis"] = 0
            print(_dump(obj))
    else:
        print("identity\tn\tm\tp\tdegree\tstatus\tdenominator\tfirst_discrepancy\tmillis")
        for r in reports:
            obj = r.to_json_obj()
            millis = obj["millis"] if args.timings else 0
            print(
                "\t".join(
                    [
                        obj["identity"],
                        str(obj["n"]),
                        "" if obj["m"] is None else str(obj["m"]),
                        str(obj["p"]),
                        "" if obj["degree"] is None else str(obj["degree"]),
                        obj["status"],
                        obj.get("denominator", ""),
                        ""
                        if obj["first_discrepancy"] is None
                        else _dump(obj["first_discrepancy"]),
                        str(millis),
                    ]
                )
            )
    if args.strict and failed:
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parafock",
        description=(
            "Exact partition / Schur-polynomial combinatorics of "
            "parastatistics Fock-space characters.  Variables are ordered "
            "even block first (1..n), then odd block (n+1..n+m); polynomial "
            "JSON stores exponents in half units (entry 2c = exponent c)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(sp):
        sp.add_argument(
            "--format", choices=("json", "tsv"), default="json", help="output format"
        )

    sp = sub.add_parser("schur", help="Schur polynomial of a partition")
    sp.add_argument("--lambda", dest="lam", default="", help="partition, e.g. 2,1")
    sp.add_argument("--n", type=int, required=True, help="number of even variables")
    sp.add_argument("--m", type=int, default=0, help="number of odd variables")
    sp.add_argument(
        "--algorithm",
        choices=("jt", "alt", "tab"),
        default="jt",
        help="determinant (jt), bialternant quotient (alt) or tableau sum (tab)",
    )
    add_format(sp)
    sp.set_defaults(func=_cmd_schur)

    sp = sub.add_parser("hook-schur", help="hook (supersymmetric) Schur polynomial")
    sp.add_argument("--lambda", dest="lam", default="", help="partition, e.g. 2,1")
    sp.add_argument("--n", type=int, required=True, help="number of even variables")
    sp.add_argument("--m", type=int, required=True, help="number of odd variables")
    sp.add_argument(
        "--algorithm",
        choices=("br", "tab"),
        default="br",
        help="sub-diagram expansion (br) or super-tableau sum (tab)",
    )
    add_format(sp)
    sp.set_defaults(func=_cmd_hook_schur)

    sp = sub.add_parser("w1", help="minimal-length coset representatives")
    sp.add_argument("--n", type=int, required=True, help="rank")
    sp.add_argument("--force", action="store_true", help="override the rank limit")
    add_format(sp)
    sp.set_defaults(func=_cmd_w1)

    sp = sub.add_parser("cohomology", help="nilradical cohomology table")
    sp.add_argument("--n", type=int, required=True, help="rank")
    sp.add_argument("--p", type=int, required=True, help="order of parastatistics")
    sp.add_argument(
        "--route",
        choices=("partitions", "w1"),
        default="partitions",
        help="which independent construction to run",
    )
    sp.add_argument("--force", action="store_true", help="override the rank limit")
    add_format(sp)
    sp.set_defaults(func=_cmd_cohomology)

    sp = sub.add_parser("branch", help="branching character of the level-p module")
    sp.add_argument("--n", type=int, required=True, help="rank")
    sp.add_argument("--p", type=int, required=True, help="order of parastatistics")
    sp.add_argument("--force", action="store_true", help="override the rank limit")
    add_format(sp)
    sp.set_defaults(func=_cmd_branch)

    sp = sub.add_parser("dims", help="module dimensions: per-diagram and totals")
    sp.add_argument("--n", type=int, required=True, help="rank")
    sp.add_argument("--p", type=int, required=True, help="order of parastatistics")
    add_format(sp)
    sp.set_defaults(func=_cmd_dims)

    sp = sub.add_parser("verify", help="check a character identity")
    sp.add_argument(
        "--identity",
        required=True,
        choices=("parafermion", "paraboson", "parastat", "weyl-character"),
    )
    sp.add_argument("--n", required=True, help="rank, or inclusive range like 1..3")
    sp.add_argument("--m", help="odd variables (parastat), int or range")
    sp.add_argument("--p", required=True, help="order, int or inclusive range")
    sp.add_argument(
        "--degree",
        type=int,
        help=f"truncation bound for series checks (default from ${DEGREE_ENV})",
    )
    sp.add_argument(
        "--sweep",
        action="store_true",
        help="marker flag; ranges in --n/--m/--p always sweep",
    )
    sp.add_argument(
        "--strict",
        action="store_true",
        help="exit 1 if any emitted report fails",
    )
    sp.add_argument(
        "--alt-denominator",
        action="store_true",
        help="paraboson: also run and report the symmetric-square denominator variant",
    )
    sp.add_argument("--force", action="store_true", help="override the rank limit")
    sp.add_argument(
        "--timings",
        action="store_true",
        help="report real millis (off by default so output is reproducible)",
    )
    add_format(sp)
    sp.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
