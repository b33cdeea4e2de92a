"""Command-line front end.

Exit codes: 0 winnable / verified win, 1 not winnable / not a win,
2 usage or I/O error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench
from .cnf import parse_dimacs
from .core import verify
from .dp import state_limit_from_env
from .errors import HanabiError, ResourceLimit
from .formats import emit_instance, emit_plan, parse_instance, parse_plan
from .generate import gen_random
from .lazy import filter_useless
from .oracle import DEFAULT_BUDGET
from .reduction import reduce
from .solvers import ALGORITHMS, solve

EXIT_WIN, EXIT_NO_WIN, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def cmd_solve(args) -> int:
    instance = parse_instance(_read(args.instance))
    if args.emit_plan and args.no_journal:
        raise UsageError("--emit-plan needs backpointers; drop --no-journal")
    state_limit = args.state_limit if args.state_limit is not None else state_limit_from_env()
    ok, plan = solve(instance, args.algo, budget=args.budget, journal=not args.no_journal,
                     state_limit=state_limit, dominance=args.dominance)
    print("winnable" if ok else "not winnable")
    if ok and args.emit_plan:
        _write(args.emit_plan, emit_plan(plan))
    return EXIT_WIN if ok else EXIT_NO_WIN


def cmd_verify(args) -> int:
    instance = parse_instance(_read(args.instance))
    plan = parse_plan(_read(args.plan))
    verdict = verify(instance, plan)
    if verdict.win:
        print("win")
        return EXIT_WIN
    print("not a win", file=sys.stdout)
    print(verdict.describe(), file=sys.stderr)
    return EXIT_NO_WIN


def cmd_filter(args) -> int:
    instance = parse_instance(_read(args.instance))
    result = filter_useless(instance)
    print("removed " + " ".join(str(i + 1) for i in sorted(result.removed)), file=sys.stderr)
    if result.unwinnable is not None:
        print(f"unwinnable: no usable card of value {result.unwinnable}", file=sys.stderr)
        return EXIT_NO_WIN
    _write(args.output, emit_instance(result.filtered_instance()))
    return EXIT_WIN


def cmd_reduce(args) -> int:
    formula = parse_dimacs(_read(args.cnf))
    art = reduce(formula, args.variant, args.r, args.h)
    _write(args.output, emit_instance(art.instance))
    if args.meta:
        _write(args.meta, art.spans_text())
    return EXIT_WIN


def cmd_gen(args) -> int:
    instance = gen_random(args.n, args.c, args.r, args.h, args.seed, args.solvable)
    _write(args.output, emit_instance(instance))
    return EXIT_WIN


def cmd_bench(args) -> int:
    rows = bench.run_suite(args.suite, args.jobs)
    _write(args.out, bench.to_tsv(rows))
    return EXIT_WIN


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hanabi", description="Solitaire Hanabi solvers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide winnability")
    p.add_argument("instance")
    p.add_argument("--algo", choices=ALGORITHMS, default="auto")
    p.add_argument("--emit-plan", metavar="OUT")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="oracle node limit")
    p.add_argument("--no-journal", action="store_true", help="dp: skip backpointers")
    p.add_argument("--state-limit", type=int, help="dp: max states per layer")
    p.add_argument("--dominance", action="store_true", help="dp: drop keys holding dead cards")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a play sequence")
    p.add_argument("instance")
    p.add_argument("plan")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("filter", help="remove useless cards from a one-color deck")
    p.add_argument("instance")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("reduce", help="build an instance from a 3-CNF formula")
    p.add_argument("cnf")
    p.add_argument("--variant", choices=("base", "padded", "h1"))
    p.add_argument("--r", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--meta", metavar="SPANS")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="seeded random instance")
    for name in ("n", "c", "r", "h", "seed"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--solvable", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="timing suites")
    p.add_argument("--suite", choices=sorted(bench.SUITES), required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_WIN
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (UsageError, HanabiError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
