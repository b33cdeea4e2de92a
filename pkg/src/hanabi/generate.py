"""Seeded random instances."""

from __future__ import annotations

import random

from .core import Card, Instance
from .errors import InfeasibleRequest
from .greedy import compute_f

DEFAULT_RETRIES = 1000


def full_permutation(n: int, c: int, rng: random.Random) -> list[Card]:
    # Shuffle ids and build the cards afterwards, so the card objects sit in memory
    # in deck order (as they do for a parsed file). Large decks scan much faster.
    ids = list(range(n * c))
    rng.shuffle(ids)
    return [Card(i % n + 1, i // n + 1) for i in ids]


def gen_random(n: int, c: int, r: int, h: int, seed: int, solvable: bool = False,
               retries: int = DEFAULT_RETRIES) -> Instance:
    """Random deck, identical for identical arguments.

    Every (value, color) pair gets between 1 and r copies. With ``solvable``
    (r=1 only) full permutations are reshuffled until their overlap width is
    at most h.
    """
    if min(n, c, r) < 1 or h < 0:
        raise ValueError(f"parameters must be positive: n={n} c={c} r={r} h={h}")
    rng = random.Random(seed)
    if solvable:
        if r != 1:
            raise InfeasibleRequest("solvable generation is only supported for r=1")
        for _ in range(retries):
            inst = Instance(n, c, 1, h, tuple(full_permutation(n, c, rng)))
            if compute_f(inst).width <= h:
                return inst
        raise InfeasibleRequest(f"no permutation with overlap width <= {h} in {retries} draws")
    deck = [Card(a, k) for a in range(1, n + 1) for k in range(1, c + 1)
            for _ in range(rng.randint(1, r))]
    rng.shuffle(deck)
    return Instance(n, c, r, h, tuple(deck))


def random_solvable_unique(n: int, c: int, seed: int) -> Instance:
    """Random permutation paired with the smallest hand size that wins it."""
    rng = random.Random(seed)
    inst = Instance(n, c, 1, 0, tuple(full_permutation(n, c, rng)))
    return inst.with_hand(compute_f(inst).width)
