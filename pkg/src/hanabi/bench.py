"""Benchmark suites emitting one TSV row per solve."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator

from .core import Instance
from .generate import gen_random, random_solvable_unique
from .solvers import solve

COLUMNS = ("algo", "N", "n", "c", "r", "h", "decision", "wall_time_ns")


def _greedy_linear() -> Iterator[tuple[str, Instance]]:
    for n in (10_000, 20_000):
        yield "greedy", random_solvable_unique(n, 10, seed=n)


def _lazy() -> Iterator[tuple[str, Instance]]:
    for h in (1, 4, 16):
        yield "lazy", gen_random(1000, 1, 199, h, seed=h)


def _small(algo: str) -> Callable[[], Iterator[tuple[str, Instance]]]:
    def suite():
        for seed in range(20):
            yield algo, gen_random(3, 2, 2, seed % 3, seed=seed)
    return suite


def _smoke() -> Iterator[tuple[str, Instance]]:
    yield "greedy", random_solvable_unique(200, 5, seed=1)
    yield "lazy", gen_random(50, 1, 3, 2, seed=1)
    yield "dp", gen_random(3, 2, 2, 1, seed=1)
    yield "oracle", gen_random(3, 2, 2, 1, seed=1)


SUITES = {
    "smoke": _smoke,
    "greedy-linear": _greedy_linear,
    "lazy": _lazy,
    "dp-small": _small("dp"),
    "oracle-small": _small("oracle"),
}


def time_solve(algo: str, instance: Instance) -> tuple[str, ...]:
    start = time.perf_counter_ns()
    ok, _ = solve(instance, algo)
    elapsed = time.perf_counter_ns() - start
    i = instance
    return (algo, str(i.N), str(i.n), str(i.c), str(i.r), str(i.h),
            "win" if ok else "no-win", str(elapsed))


def run_suite(name: str, jobs: int = 1) -> list[tuple[str, ...]]:
    cases = list(SUITES[name]())
    if jobs <= 1:
        return [time_solve(algo, inst) for algo, inst in cases]
    with ProcessPoolExecutor(jobs) as pool:
        return list(pool.map(time_solve, *zip(*cases)))


def to_tsv(rows) -> str:
    return "\n".join("\t".join(row) for row in [COLUMNS, *rows]) + "\n"
