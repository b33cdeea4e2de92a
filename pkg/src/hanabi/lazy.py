"""Single-color solver: strip useless cards, then play each value at its last copy.

A card of value a at position i is useless when h+1 values above a never occur
after i: playing it would leave h+1 cards that all have to be held at once.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Callable

from .core import Action, Card, Instance, PlaySequence, Step
from .errors import MultiColor


def _require_single_color(instance: Instance) -> None:
    if instance.c != 1:
        raise MultiColor(f"single-color solver needs c=1, instance has c={instance.c}")


def useless_witnesses(instance: Instance, i: int) -> tuple[int, ...] | None:
    """Smallest witness values proving card i useless, or None. Quadratic; a test oracle."""
    _require_single_color(instance)
    values = [card.value for card in instance.deck]
    later = set(values[i + 1:])
    missing = [w for w in range(values[i] + 1, instance.n + 1) if w not in later]
    need = instance.h + 1
    return tuple(missing[:need]) if len(missing) >= need else None


def is_useless(instance: Instance, i: int) -> bool:
    return useless_witnesses(instance, i) is not None


@dataclass
class FilterState:
    prev: list[int | None]  # same-value predecessor of each position
    last: list[int | None]  # last surviving position of each value, index 0 unused
    pending: list[int] = field(default_factory=list)  # max-heap, stored negated

    def heap_indices(self) -> list[int]:
        return sorted(-x for x in self.pending)


@dataclass(frozen=True)
class FilteredDeck:
    instance: Instance
    kept: tuple[int, ...]
    removed: tuple[int, ...]  # in removal order
    last: tuple[int | None, ...]  # index 0 unused
    unwinnable: int | None = None

    @property
    def deck(self) -> tuple[Card, ...]:
        return tuple(self.instance.deck[i] for i in self.kept)

    def filtered_instance(self) -> Instance:
        src = self.instance
        return Instance(src.n, src.c, src.r, src.h, self.deck)


def filter_useless(
    instance: Instance,
    observe: Callable[[int, FilterState], None] | None = None,
) -> FilteredDeck:
    """Remove useless cards in O(N + n log h).

    ``observe(v, state)`` is called after value v has been settled, for
    instrumentation only.
    """
    _require_single_color(instance)
    n, h = instance.n, instance.h
    deck = instance.deck
    prev: list[int | None] = [None] * len(deck)
    last: list[int | None] = [None] * (n + 1)
    for i, (a, _) in enumerate(deck):
        prev[i] = last[a]
        last[a] = i
    state = FilterState(prev, last)
    removed: list[int] = []

    def result(unwinnable=None):
        gone = set(removed)
        kept = tuple(i for i in range(len(deck)) if i not in gone)
        return FilteredDeck(instance, kept, tuple(removed), tuple(last), unwinnable)

    absent = [v for v in range(1, n + 1) if last[v] is None]
    if absent:
        return result(absent[0])
    if h >= n:
        return result()

    state.pending = [-last[v] for v in range(n - h, n + 1)]
    heapq.heapify(state.pending)
    for v in range(n - h - 1, 0, -1):
        top = -state.pending[0]
        idx = last[v]
        while idx is not None and idx > top:
            removed.append(idx)
            idx = prev[idx]
        last[v] = idx
        if idx is None:
            return result(v)
        heapq.heapreplace(state.pending, -idx)
        if observe is not None:
            observe(v, state)
    return result()


def solve_single_color(instance: Instance) -> PlaySequence | None:
    filtered = filter_useless(instance)
    if filtered.unwinnable is not None:
        return None
    last_copy = {filtered.last[v]: v for v in range(1, instance.n + 1)}
    held = bytearray(instance.n + 2)
    progress = 0
    steps = []
    for i in range(instance.N):
        v = last_copy.get(i)
        if v is None:
            steps.append(Step(Action.DISCARD))
        elif v != progress + 1:
            held[v] = 1
            steps.append(Step(Action.STORE))
        else:
            top = v
            while held[top + 1]:
                top += 1
                held[top] = 0
            progress = top
            steps.append(Step(Action.PLAY, tuple(Card(w, 1) for w in range(v + 1, top + 1))))
    return PlaySequence(steps)
