"""Command-line front end.

Subcommands: construct, verify, search, render, table, bounds.
Exit codes: 0 success, 1 a verified property fails, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from .construct import (
    CertifiedLatticeSet,
    CertifiedSet,
    chain,
    corner_avoiding_strip,
    dense_minps,
    double,
    embed_corner_avoiding,
    glue,
    lattice_minps,
    simple_minps,
    size_bounds,
    strip_chain,
)
from .errors import BoundsError, DomainError, ResourceLimitError
from .grid import GridDims, LatticeDims, LatticeSet, load_points, save_points
from .render import RenderOptions, render
from .search import SearchBudget, max_corner_avoiding, max_minps, min_percolating, monotonicity_table
from .verify import is_corner_avoiding_minps, is_minps
from .percolate import lattice_percolates


def _parse_params(pairs: list[str]) -> dict[str, int]:
    params = {}
    for pair in pairs:
        if "=" not in pair:
            raise DomainError(f"--params expects key=value, got {pair!r}")
        key, _, value = pair.partition("=")
        try:
            params[key.strip()] = int(value)
        except ValueError as exc:
            raise DomainError(f"--params value for {key!r} must be an integer") from exc
    return params


def _need(params: dict[str, int], *keys: str) -> list[int]:
    missing = [k for k in keys if k not in params]
    if missing:
        raise DomainError(f"missing --params {' '.join(k + '=<int>' for k in missing)}")
    return [params[k] for k in keys]


def _build_family(family: str, params: dict[str, int]) -> CertifiedSet | CertifiedLatticeSet:
    if family == "simple":
        m, n = _need(params, "m", "n")
        return simple_minps(m, n)
    if family == "small":
        (k,) = _need(params, "k")
        return corner_avoiding_strip(k)
    if family == "glue":
        k1, k2 = _need(params, "k1", "k2")
        return glue(corner_avoiding_strip(k1), corner_avoiding_strip(k2))
    if family == "chain":
        k, reps = _need(params, "k", "reps")
        return chain(corner_avoiding_strip(k), reps)
    if family == "double":
        k, t = _need(params, "k", "t")
        return double(corner_avoiding_strip(k), t)
    if family == "justup":
        big_m, big_n = _need(params, "M", "N")
        return strip_chain(big_m, big_n)
    if family == "lower":
        m, n = _need(params, "m", "n")
        return dense_minps(m, n)
    if family == "cavreg":
        m, n = _need(params, "m", "n")
        return embed_corner_avoiding(dense_minps(m, n))
    if family == "ddim":
        n, d = _need(params, "n", "d")
        return lattice_minps(n, d)
    raise DomainError(f"unknown family {family!r}")


def _cmd_construct(args) -> int:
    built = _build_family(args.family, _parse_params(args.params))
    save_points(args.output, built.points)
    print(f"family={args.family} dims={built.dims} size={len(built)} "
          f"claim={built.claim} -> {args.output}")
    return 0


def _lattice_is_minps(ls: LatticeSet) -> tuple[bool, str]:
    if not lattice_percolates(ls, r=2):
        return False, "not-percolating"
    for p in sorted(ls.points):
        if lattice_percolates(ls.without(p), r=2):
            return False, f"redundant-point {p}"
    return True, "ok"


def _cmd_verify(args) -> int:
    ps = load_points(args.file)
    if isinstance(ps, LatticeSet):
        if args.property != "minps":
            raise DomainError("lattice files support --property minps only")
        holds, detail = _lattice_is_minps(ps)
        print(f"property=minps holds={str(holds).lower()} detail={detail}")
        return 0 if holds else 1
    if args.property == "minps":
        verdict = is_minps(ps)
    else:
        verdict = is_corner_avoiding_minps(ps)
    witness = "-" if verdict.witness is None else f"({verdict.witness.x},{verdict.witness.y})"
    print(f"property={args.property} holds={str(verdict.holds).lower()} "
          f"detail={verdict.detail} witness={witness}")
    return 0 if verdict.holds else 1


def _cmd_search(args) -> int:
    budget = SearchBudget(
        max_nodes=args.max_nodes,
        max_time=args.max_time,
        workers=args.workers,
    )
    if args.table:
        if args.dims is None:
            raise DomainError("--table requires --dims")
        _print_table(args.dims[0], args.dims[1], budget)
        return 0
    if args.d_lattice is not None:
        if args.target != "minperc":
            raise DomainError("lattice search supports --target minperc only")
        side, d = args.d_lattice
        dims: GridDims | LatticeDims = LatticeDims(side, d)
        result = min_percolating(dims, budget, r=args.r)
        m, n = side, d
    else:
        if args.dims is None:
            raise DomainError("search requires --dims or --d-lattice")
        m, n = args.dims
        dims = GridDims(m, n)
        if args.target == "E":
            result = max_minps(dims, budget)
        elif args.target == "Ec":
            result = max_corner_avoiding(dims, budget)
        else:
            result = min_percolating(dims, budget, r=args.r)
    print(f"target={args.target} dims={dims} value={result.value} "
          f"exhaustive={str(result.exhaustive).lower()} nodes={result.nodes} "
          f"elapsed={result.elapsed:.3f}s")
    witness_file = "-"
    if args.witness_out:
        save_points(args.witness_out, result.witness)
        witness_file = args.witness_out
        print(f"witness -> {witness_file}")
    if args.append_results:
        with open(args.append_results, "a", encoding="utf-8") as fh:
            fh.write(f"{args.target}\t{m}\t{n}\t{result.value}\t"
                     f"{str(result.exhaustive).lower()}\t{witness_file}\n")
    return 0


def _print_table(max_m: int, max_n: int, budget: SearchBudget | None = None) -> None:
    table = monotonicity_table(max_m, max_n, budget)
    header = "m\\n\t" + "\t".join(str(n) for n in range(1, max_n + 1))
    print(header)
    for m in range(1, max_m + 1):
        print("\t".join([str(m)] + [str(table[(m, n)]) for n in range(1, max_n + 1)]))


def _cmd_render(args) -> int:
    ps = load_points(args.file)
    if isinstance(ps, LatticeSet):
        raise DomainError("render supports 2D point sets only")
    opts = RenderOptions(
        glyph_on=args.on,
        glyph_off=args.off,
        show_closure=args.closure,
        show_rects=args.rects,
    )
    print(render(ps, opts))
    return 0


def _cmd_table(args) -> int:
    _print_table(args.max_m, args.max_n)
    return 0


def _cmd_bounds(args) -> int:
    m, n = args.dims
    lower, upper = size_bounds(m, n)
    print(f"dims={m}x{n} lower={lower} upper={upper} (~{float(upper):.2f})")
    return 0


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minps",
        description="Bootstrap percolation: constructions, verification, and exact search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named family and write a .pts file")
    p.add_argument("--family", required=True,
                   choices=["simple", "small", "glue", "chain", "double",
                            "justup", "lower", "cavreg", "ddim"])
    p.add_argument("--params", nargs="*", default=[], metavar="key=value")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="certify a property of a .pts file")
    p.add_argument("--property", required=True, choices=["minps", "corner-avoiding"])
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="exhaustive extremal search")
    p.add_argument("--target", required=True, choices=["E", "Ec", "minperc"])
    p.add_argument("--dims", nargs=2, type=int, metavar=("M", "N"))
    p.add_argument("--d-lattice", nargs=2, type=int, metavar=("N", "D"))
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--max-nodes", type=int, default=SearchBudget().max_nodes)
    p.add_argument("--max-time", type=float, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--table", action="store_true",
                   help="print the exact-value table up to --dims instead")
    p.add_argument("--witness-out", default=None, metavar="FILE.pts")
    p.add_argument("--append-results", default=None, metavar="RESULTS.tsv")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("render", help="draw a .pts file as a character grid")
    p.add_argument("file")
    p.add_argument("--closure", action="store_true")
    p.add_argument("--rects", action="store_true")
    p.add_argument("--on", default="#")
    p.add_argument("--off", default=".")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("table", help="exact max-MinPS sizes for all grids up to a limit")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("bounds", help="certified lower and proven upper size bounds")
    p.add_argument("--dims", nargs=2, type=int, required=True, metavar=("M", "N"))
    p.set_defaults(func=_cmd_bounds)

    return parser


def run(argv=None) -> int:
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (DomainError, BoundsError, ResourceLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
