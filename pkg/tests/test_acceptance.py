"""Acceptance criteria, one test each. Every test reports a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` (the lines appear in the
"acceptance criteria" summary section) or as a script with
``python tests/test_acceptance.py``.
"""

import gc
import random
import sys
import time
from itertools import permutations, product

import pytest

from conftest import ACCEPTANCE_LINES
from hanabi.cnf import CnfFormula
from hanabi.core import Instance, verify
from hanabi.dp import dp_decide, dp_extract_plan
from hanabi.generate import random_solvable_unique
from hanabi.greedy import compute_f, solve_unique
from hanabi.lazy import filter_useless, is_useless, solve_single_color
from hanabi.oracle import Outcome
from hanabi.oracle import solve as oracle
from hanabi.reduction import assignment_plan, reduce
from recurrence import NEG, all_keys, backward_table

ORACLE_BUDGET = 10**8


def report(number, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def unique_decks():
    cards = [(a, k) for a in range(1, 4) for k in (1, 2)]
    for perm in permutations(cards):
        yield Instance(3, 2, 1, 0, perm)


def test_greedy_matches_oracle():
    start = time.perf_counter()
    total = mismatches = 0
    for inst in unique_decks():
        for h in range(4):
            case = inst.with_hand(h)
            plan = solve_unique(case)
            total += 1
            if (plan is not None) != oracle(case).win or (plan and not verify(case, plan).win):
                mismatches += 1
    elapsed = time.perf_counter() - start
    report(1, mismatches == 0 and total == 2880 and elapsed < 60,
           f"greedy vs oracle on {total} cases, {mismatches} mismatches, {elapsed:.1f}s (limit 60s)")


def test_threshold_equals_width():
    mismatches = 0
    for inst in unique_decks():
        width = compute_f(inst).width
        smallest = next(h for h in range(inst.N + 1) if oracle(inst.with_hand(h)).win)
        mismatches += smallest != width
    report(2, mismatches == 0, f"smallest winning hand equals overlap width on 720 decks, {mismatches} mismatches")


def single_color_decks():
    for length in range(7):
        for values in product((1, 2, 3), repeat=length):
            if all(values.count(v) <= 2 for v in (1, 2, 3)):
                yield values


def test_lazy_matches_oracle():
    start = time.perf_counter()
    total = bad = 0
    for values in single_color_decks():
        for h in range(3):
            inst = Instance(3, 1, 2, h, tuple((v, 1) for v in values))
            total += 1
            plan = solve_single_color(inst)
            ok = (plan is not None) == oracle(inst).win
            if plan is not None:
                ok &= verify(inst, plan).win
            res = filter_useless(inst)
            if res.unwinnable is None:
                filtered = res.filtered_instance()
                ok &= not any(is_useless(filtered, i) for i in range(filtered.N))
            bad += not ok
    elapsed = time.perf_counter() - start
    report(3, bad == 0 and elapsed < 120,
           f"lazy vs oracle on {total} cases, {bad} failures, {elapsed:.1f}s (limit 120s)")


def dp_cases(count, seed=2024):
    rng = random.Random(seed)
    for _ in range(count):
        n, c, r, h = rng.randint(1, 4), rng.randint(1, 2), rng.randint(1, 2), rng.randint(0, 2)
        cards = [(a, k) for a in range(1, n + 1) for k in range(1, c + 1)
                 for _ in range(rng.randint(1, r))]
        rng.shuffle(cards)
        if rng.random() < 0.15:
            del cards[rng.randrange(len(cards))]
        yield Instance(n, c, r, h, tuple(cards))


def test_dp_matches_oracle():
    from hanabi.dp import dp_layers

    start = time.perf_counter()
    total = bad = conformance = wins = 0
    for inst in dp_cases(1200):
        total += 1
        ok, table = dp_decide(inst)
        good = ok == oracle(inst).win
        if ok:
            wins += 1
            good &= verify(inst, dp_extract_plan(table)).win
        if inst.N <= 6:
            conformance += 1
            dp = backward_table(inst)
            for s, layer in enumerate(dp_layers(inst)):
                expected = {}
                for hand, played in all_keys(inst):
                    value = dp(s, hand, played)
                    if value != NEG:
                        expected[(tuple(sorted(hand, key=lambda x: (x[1], x[0]))), played)] = value
                good &= layer == expected
        bad += not good
    elapsed = time.perf_counter() - start
    report(4, bad == 0 and total >= 1000 and elapsed < 300,
           f"dp vs oracle on {total} instances ({wins} winnable, {conformance} with recurrence check), "
           f"{bad} failures, {elapsed:.1f}s (limit 300s)")


WORKED = CnfFormula(3, ((1, -2, 3), (1, 2, -3)))


def test_reduction_parameters():
    inst = reduce(WORKED).instance
    dummy = [a for a, k in inst.deck if k == 7]
    expected = [2, 1, 4, 5, 3, 7, 8, 6, 10, 11, 9, 13, 14, 12]
    ok = (inst.c, inst.n, inst.r, inst.h) == (7, 14, 2, 2) and inst.N <= 196 and dummy == expected
    report(5, ok, f"c={inst.c} n={inst.n} r={inst.r} h={inst.h} N={inst.N} (bound 196), "
                  f"dummy values {' '.join(map(str, dummy))}")


def formulas():
    signs = [(a, b, c) for a in (1, -1) for b in (2, -2) for c in (3, -3)]
    for m in (1, 2, 3):
        for clauses in product(signs, repeat=m):
            yield CnfFormula(3, clauses)


FULL_UNSAT = CnfFormula(3, tuple((a, b, c) for a in (1, -1) for b in (2, -2) for c in (3, -3)))


def test_sat_equivalence():
    start = time.perf_counter()
    total = sat = unsat = bad = 0
    for formula in formulas():
        total += 1
        art = reduce(formula)
        bits = formula.first_satisfying()
        if bits is not None:
            sat += 1
            bad += not verify(art.instance, assignment_plan(art, bits)).win
        else:
            unsat += 1
            bad += oracle(art.instance, ORACLE_BUDGET).outcome is not Outcome.NO_WIN
    # with three variables no formula of at most three clauses is unsatisfiable,
    # so the losing direction is also exercised on the eight-clause formula
    extra = oracle(reduce(FULL_UNSAT).instance, ORACLE_BUDGET).outcome
    bad += extra is not Outcome.NO_WIN
    elapsed = time.perf_counter() - start
    report(6, bad == 0 and total >= 300 and elapsed < 1800,
           f"{total} formulas ({sat} satisfiable, {unsat} unsatisfiable), "
           f"eight-clause unsatisfiable formula: {extra.value}, {bad} counterexamples, {elapsed:.1f}s (limit 1800s)")


def test_h1_variant():
    art = reduce(WORKED, "h1")
    inst = art.instance
    sizes = [art.span(f"clause{j}.extra").end - art.span(f"clause{j}.extra").start for j in (1, 2)]
    outcome = oracle(inst, ORACLE_BUDGET).outcome
    ok = (inst.r, inst.h) == (3, 1) and sizes == [12, 12] and outcome is Outcome.WIN
    report(7, ok, f"r={inst.r} h={inst.h}, extra cards per clause {sizes}, oracle {outcome.value}")


def best_times(fn, args, repeats):
    """Minimum wall time per argument over interleaved repeats, garbage collector paused.

    Interleaving keeps slow drifts in machine load from favoring one argument.
    """
    best = [float("inf")] * len(args)
    enabled = gc.isenabled()
    gc.disable()
    try:
        for arg in args:
            fn(arg)  # warm-up
        for _ in range(repeats):
            for i, arg in enumerate(args):
                start = time.perf_counter()
                fn(arg)
                best[i] = min(best[i], time.perf_counter() - start)
    finally:
        if enabled:
            gc.enable()
    return best


def test_complexity_smoke():
    small = random_solvable_unique(10_000, 10, seed=1)
    large = random_solvable_unique(20_000, 10, seed=2)
    t_small, t_large = best_times(solve_unique, [small, large], 21)
    ratio = t_large / t_small
    rng = random.Random(3)
    n = 1000
    values = list(range(1, n + 1)) + [rng.randint(1, n) for _ in range(100_000 - n)]
    rng.shuffle(values)
    lazy_inst = Instance(n, 1, 100_000, 8, tuple((v, 1) for v in values))
    (t_lazy,) = best_times(solve_single_color, [lazy_inst], 1)
    ok = ratio <= 2.5 and t_lazy < 1.0 and small.N == 100_000 and large.N == 200_000
    report(8, ok, f"greedy {t_small * 1e3:.0f}ms at N=1e5, {t_large * 1e3:.0f}ms at N=2e5, "
                  f"ratio {ratio:.2f} (limit 2.5); lazy {t_lazy * 1e3:.0f}ms at N=1e5 (limit 1000ms)")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
