"""Command-line front end.

Result line is ``FOUND <v1,v2,...> [weight=<w>]`` or ``NONE``; extra
information follows as ``#`` comment lines. Exit codes: 0 found, 1 none,
2 usage or parse error, 3 oracle/family guard exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench
from .colorcoding import (
    BACKENDS,
    ColoringFamilySpec,
    CycleStats,
    find_induced_cycle_derandomized,
    find_induced_cycle_random,
)
from .cycles_exact import find_induced_cycle_exact
from .domset import dominating_set_degenerate, dominating_set_minorfree
from .fileformat import ParseError, _fmt, read_instance, write_instance
from .generators import MODELS, GenSpec, SpecError, generate
from .graph import degeneracy, degeneracy_ordering
from .oracles import (
    GuardExceeded,
    brute_force_clique_count,
    brute_force_domset,
    brute_force_induced_cycle,
)

EXIT_FOUND, EXIT_NONE, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _found(vertices, weight=None) -> str:
    line = "FOUND " + ",".join(str(v) for v in vertices)
    if weight is not None:
        line += f" weight={_fmt(weight)}"
    return line


def _emit_domset(answer, stats=None) -> int:
    if answer.found:
        print(_found(sorted(answer.solution), answer.weight))
    else:
        print("NONE")
    if stats is not None:
        print(stats.line())
    return EXIT_FOUND if answer.found else EXIT_NONE


def _emit_cycle(witness, extra: str | None = None) -> int:
    print("NONE" if witness is None else _found(witness))
    if extra:
        print(extra)
    return EXIT_NONE if witness is None else EXIT_FOUND


def cmd_degeneracy(args) -> int:
    print(degeneracy(read_instance(args.file).graph))
    return EXIT_FOUND


def cmd_domset(args) -> int:
    bw = read_instance(args.file)
    if args.minorfree:
        answer, stats = dominating_set_minorfree(bw, args.k, args.h, weighted=args.weighted)
    else:
        answer, stats = dominating_set_degenerate(bw, args.k, weighted=args.weighted)
    return _emit_domset(answer, stats)


def cmd_cycle(args) -> int:
    g = read_instance(args.file).graph
    if args.k < 3:
        raise UsageError("--k must be at least 3")
    if args.mode == "exact":
        if args.k > 5:
            raise UsageError("--mode exact supports only k <= 5")
        return _emit_cycle(find_induced_cycle_exact(degeneracy_ordering(g), args.k))
    stats = CycleStats()
    if args.mode == "mc":
        w = find_induced_cycle_random(
            g, args.k, trials=args.trials, seed=args.seed, delta=args.delta, stats=stats
        )
        return _emit_cycle(w, f"# trials={stats.trials}")
    family = ColoringFamilySpec(
        backend=args.backend, trials=args.trials or 1000, seed=args.seed
    )
    w = find_induced_cycle_derandomized(g, args.k, family, stats=stats)
    return _emit_cycle(w, f"# colorings={stats.colorings} trials={stats.trials}")


def cmd_gen(args) -> int:
    spec = GenSpec(
        model=args.model,
        n=args.n,
        k=args.k,
        d=args.d,
        seed=args.seed,
        rows=args.rows,
        cols=args.cols,
        subdivide=args.subdivide,
        white_fraction=args.white_fraction,
        max_weight=args.max_weight,
    )
    try:
        out = generate(spec)
    except SpecError as exc:
        raise UsageError(str(exc)) from None
    write_instance(out.instance, args.out)
    if out.certificate is not None:
        cert = Path(str(args.out) + ".cert")
        cert.write_text(_found(out.certificate) + "\n")
    print(f"# wrote {args.out} n={out.instance.n} m={out.instance.graph.m}")
    return EXIT_FOUND


def cmd_oracle(args) -> int:
    bw = read_instance(args.file)
    if args.problem == "domset":
        return _emit_domset(brute_force_domset(bw, args.k, weighted=args.weighted))
    if args.problem == "cycle":
        if args.k < 3:
            raise UsageError("--k must be at least 3")
        return _emit_cycle(brute_force_induced_cycle(bw.graph, args.k))
    print(brute_force_clique_count(bw.graph, args.k))
    return EXIT_FOUND


def cmd_bench(args) -> int:
    try:
        rows = bench.run_suite(args.suite, args.csv, repeats=args.repeats)
    except KeyError as exc:
        raise UsageError(str(exc)) from None
    print(f"# wrote {len(rows)} rows to {args.csv}")
    return EXIT_FOUND


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fptgraph", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("degeneracy", help="print the degeneracy of an instance")
    s.add_argument("file")
    s.set_defaults(func=cmd_degeneracy)

    s = sub.add_parser("domset", help="dominating set of size at most k")
    s.add_argument("file")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--minorfree", action="store_true")
    s.add_argument("--h", type=int, default=5, help="excluded clique order (with --minorfree)")
    s.add_argument("--weighted", action="store_true")
    s.set_defaults(func=cmd_domset)

    s = sub.add_parser("cycle", help="induced cycle of length k")
    s.add_argument("file")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--mode", choices=("exact", "mc", "derand"), default="exact")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=None)
    s.add_argument("--delta", type=float, default=1e-3)
    s.add_argument("--backend", choices=BACKENDS, default="exhaustive")
    s.set_defaults(func=cmd_cycle)

    s = sub.add_parser("gen", help="generate an instance")
    s.add_argument("--model", choices=MODELS, required=True)
    s.add_argument("--n", type=int, default=0)
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--d", type=int, default=0)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--rows", type=int, default=0)
    s.add_argument("--cols", type=int, default=0)
    s.add_argument("--subdivide", action="store_true")
    s.add_argument("--white-fraction", type=float, default=0.0)
    s.add_argument("--max-weight", type=int, default=0)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("oracle", help="brute-force reference answers")
    s.add_argument("problem", choices=("domset", "cycle", "cliques"))
    s.add_argument("file")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--weighted", action="store_true")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("bench", help="run a timing suite")
    s.add_argument("--suite", required=True, help=f"one of {sorted(bench.SUITES)}")
    s.add_argument("--csv", required=True)
    s.add_argument("--repeats", type=int, default=1)
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
