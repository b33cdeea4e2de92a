"""Solvers, verifier and hardness-instance generator for solitaire Hanabi."""

from .core import Action, Card, GameState, Instance, PlaySequence, Step, Verdict, verify
from .dp import dp_decide, dp_extract_plan, solve_dp
from .greedy import compute_f, solve_unique
from .lazy import filter_useless, is_useless, solve_single_color
from .solvers import route, solve

__all__ = [
    "Action", "Card", "GameState", "Instance", "PlaySequence", "Step", "Verdict", "verify",
    "dp_decide", "dp_extract_plan", "solve_dp", "compute_f", "solve_unique",
    "filter_useless", "is_useless", "solve_single_color", "route", "solve",
]
