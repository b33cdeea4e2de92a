"""Uniform entry point over the four solvers."""

from __future__ import annotations

from .core import Instance, PlaySequence
from .dp import dp_decide, dp_extract_plan
from .errors import HanabiError, ResourceLimit
from .greedy import solve_unique
from .lazy import solve_single_color
from .oracle import DEFAULT_BUDGET, Outcome
from .oracle import solve as oracle_solve

ALGORITHMS = ("auto", "greedy", "lazy", "dp", "oracle")


class WrongAlgorithm(HanabiError, ValueError):
    pass


def route(instance: Instance) -> str:
    """r=1 goes to greedy, c=1 to lazy, everything else to dp. h plays no part."""
    if instance.r == 1:
        return "greedy"
    if instance.c == 1:
        return "lazy"
    return "dp"


def solve(instance: Instance, algo: str = "auto", *, budget: int = DEFAULT_BUDGET,
          journal: bool = True, state_limit: int | None = None,
          dominance: bool = False) -> tuple[bool, PlaySequence | None]:
    """Return (winnable, plan). The plan is None when not winnable or not journaled.

    Raises ResourceLimit when the dp state ceiling or the oracle budget is hit.
    """
    if algo == "auto":
        algo = route(instance)
    if algo == "greedy":
        if instance.r != 1:
            raise WrongAlgorithm("not r=1; use --algo dp")
        plan = solve_unique(instance)
        return plan is not None, plan
    if algo == "lazy":
        if instance.c != 1:
            raise WrongAlgorithm("not c=1; use --algo dp")
        plan = solve_single_color(instance)
        return plan is not None, plan
    if algo == "dp":
        ok, table = dp_decide(instance, journal=journal, state_limit=state_limit, dominance=dominance)
        return ok, dp_extract_plan(table) if ok and journal else None
    if algo == "oracle":
        result = oracle_solve(instance, budget)
        if result.outcome is Outcome.BUDGET_EXCEEDED:
            raise ResourceLimit(f"oracle budget of {budget} nodes exceeded")
        return result.win, result.plan
    raise WrongAlgorithm(f"unknown algorithm {algo!r}; choose from {', '.join(ALGORITHMS)}")
