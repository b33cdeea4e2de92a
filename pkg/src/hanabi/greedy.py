"""Linear-time solver for decks in which every card appears at most once.

Each card i must be held during (i, f_i], where f_i is the last position of a card
of the same color with value at most a_i. The deck is winnable with hand size h
exactly when at most h of these intervals overlap; the greedy policy (play when
playable, otherwise store) realizes that bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Action, Card, Instance, PlaySequence, Step
from .errors import NotPermutation, NotUnique


@dataclass(frozen=True)
class IntervalProfile:
    f: tuple[int, ...]
    intervals: tuple[tuple[int, int], ...]
    width: int


def _check_unique(instance: Instance, exc=NotPermutation) -> None:
    c = instance.c
    seen = bytearray(instance.n * c + c + 1)
    for pos, (a, k) in enumerate(instance.deck):
        slot = a * c + k
        if seen[slot]:
            raise exc(f"card {Card(a, k)} occurs more than once (again at position {pos})")
        seen[slot] = 1


def compute_f(instance: Instance) -> IntervalProfile:
    _check_unique(instance)
    n, c = instance.n, instance.c
    pos = [[-1] * (n + 1) for _ in range(c + 1)]
    for i, (a, k) in enumerate(instance.deck):
        pos[k][a] = i
    # prefix maxima: best[k][a] = last position among values <= a of color k
    for k in range(1, c + 1):
        row = pos[k]
        for a in range(2, n + 1):
            if row[a - 1] > row[a]:
                row[a] = row[a - 1]
    f = tuple(pos[k][a] for a, k in instance.deck)
    intervals = tuple((i, fi) for i, fi in enumerate(f) if fi > i)
    return IntervalProfile(f, intervals, overlap_width(intervals, instance.N))


def overlap_width(intervals, length: int) -> int:
    """Maximum number of half-open intervals (i, j] sharing a point, by endpoint sweep."""
    delta = [0] * (length + 2)
    for i, j in intervals:
        delta[i + 1] += 1
        delta[j + 1] -= 1
    width = depth = 0
    for d in delta:
        depth += d
        if depth > width:
            width = depth
    return width


def solve_unique(instance: Instance) -> PlaySequence | None:
    """Greedy plan for an r=1 deck, or None if it cannot be won."""
    _check_unique(instance, NotUnique)
    n, c, h = instance.n, instance.c, instance.h
    if instance.N != n * c:
        return None
    # held[k][a] is the stored card (k, a), reused as-is in chained plays
    held: list[list[Card | None]] = [[None] * (n + 2) for _ in range(c + 1)]
    progress = [0] * (c + 1)
    size = 0
    steps = []
    play = Step(Action.PLAY)
    store = Step(Action.STORE)
    for card in instance.deck:
        a, k = card
        if progress[k] != a - 1:
            size += 1
            if size > h:
                return None
            held[k][a] = card
            steps.append(store)
            continue
        row = held[k]
        top = a
        while row[top + 1] is not None:
            top += 1
        progress[k] = top
        if top == a:
            steps.append(play)
        else:
            size -= top - a
            chained = tuple(row[a + 1:top + 1])
            row[a + 1:top + 1] = [None] * (top - a)
            steps.append(Step(Action.PLAY, chained))
    return PlaySequence(steps)
