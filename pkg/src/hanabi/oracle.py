"""Reference solver: memoized depth-first search over complete game states.

Meant to be obviously correct rather than fast. Every shortcut it takes is a
dominance argument that can be switched off, and the test suite checks each
switch against the unrestricted search on small decks.
"""

from __future__ import annotations

import enum
import sys
from collections import Counter
from dataclasses import dataclass

from .core import Action, Card, Instance, PlaySequence, Step, hand_order

DEFAULT_BUDGET = 10**7


class Outcome(enum.Enum):
    WIN = "win"
    NO_WIN = "no-win"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class OracleResult:
    outcome: Outcome
    plan: PlaySequence | None = None
    nodes: int = 0

    @property
    def win(self) -> bool:
        return self.outcome is Outcome.WIN


class _Budget(Exception):
    pass


def _insert(hand: tuple[Card, ...], card: Card) -> tuple[Card, ...]:
    return tuple(sorted(hand + (card,), key=hand_order))


def _remove(hand: tuple[Card, ...], card: Card) -> tuple[Card, ...]:
    out = list(hand)
    out.remove(card)
    return tuple(out)


def _chain(hand, progress, color):
    """Play every card of ``color`` from hand that becomes playable, in order."""
    chained = []
    nxt = Card(progress[color - 1] + 1, color)
    while nxt in hand:
        hand = _remove(hand, nxt)
        chained.append(nxt)
        nxt = Card(nxt.value + 1, color)
    if chained:
        progress = progress[: color - 1] + (chained[-1].value,) + progress[color:]
    return hand, progress, tuple(chained)


class _Search:
    def __init__(self, instance, budget, memo, eager, allow_duplicates, prune):
        self.inst = instance
        self.deck = instance.deck
        self.N = instance.N
        self.n = instance.n
        self.h = instance.h
        self.budget = budget
        self.nodes = 0
        self.memo = {} if memo else None
        self.eager = eager
        self.dups = allow_duplicates
        self.prune = prune and eager
        # suffix[i][card] = copies of card at positions >= i, for the feasibility cut
        self.suffix = None
        if self.prune:
            self.suffix = [Counter() for _ in range(self.N + 1)]
            for i in range(self.N - 1, -1, -1):
                self.suffix[i] = self.suffix[i + 1].copy()
                self.suffix[i][self.deck[i]] += 1
        self.choice = {}

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _Budget

    def hopeless(self, cursor, hand, progress):
        future = self.suffix[cursor]
        for k, p in enumerate(progress, start=1):
            for v in range(p + 1, self.n + 1):
                card = Card(v, k)
                if not future[card] and card not in hand:
                    return True
        return False

    def moves(self, cursor, hand, progress):
        """Yield (step, next_hand, next_progress) in Play, Store, Discard order."""
        card = self.deck[cursor]
        k = card.color
        playable = progress[k - 1] == card.value - 1
        if playable:
            nprog = progress[: k - 1] + (card.value,) + progress[k:]
            if self.eager:
                nhand, nprog2, chained = _chain(hand, nprog, k)
                yield Step(Action.PLAY, chained), nhand, nprog2
            else:
                yield Step(Action.PLAY), hand, nprog
            if self.prune:
                return
        dead = progress[k - 1] >= card.value
        if len(hand) < self.h and (self.dups or card not in hand) and not (self.prune and dead):
            yield Step(Action.STORE), _insert(hand, card), progress
        yield Step(Action.DISCARD), hand, progress

    def wins(self, cursor, hand, progress) -> bool:
        key = (cursor, hand, progress)
        if self.memo is not None and key in self.memo:
            return self.memo[key]
        self.tick()
        ok = self._wins(cursor, hand, progress)
        if self.memo is not None:
            self.memo[key] = ok
        return ok

    def _wins(self, cursor, hand, progress) -> bool:
        key = (cursor, hand, progress)
        if not self.eager:
            # delayed plays: any playable hand card may be played before drawing
            for held in dict.fromkeys(hand):
                if progress[held.color - 1] == held.value - 1:
                    k = held.color
                    nprog = progress[: k - 1] + (held.value,) + progress[k:]
                    if self.wins(cursor, _remove(hand, held), nprog):
                        self.choice[key] = ("hand", held)
                        return True
        if cursor == self.N:
            return all(p == self.n for p in progress)
        if self.prune and self.hopeless(cursor, hand, progress):
            return False
        for step, nhand, nprog in self.moves(cursor, hand, progress):
            if self.wins(cursor + 1, nhand, nprog):
                self.choice[key] = ("draw", step, nhand, nprog)
                return True
        return False

    def plan(self) -> PlaySequence:
        steps: list[Step] = []
        cursor, hand, progress = 0, (), (0,) * self.inst.c
        while True:
            entry = self.choice.get((cursor, hand, progress))
            if entry is None:
                break
            if entry[0] == "hand":
                held = entry[1]
                last = steps[-1]
                steps[-1] = Step(last.action, last.hand_plays + (held,))
                k = held.color
                hand = _remove(hand, held)
                progress = progress[: k - 1] + (held.value,) + progress[k:]
            else:
                _, step, hand, progress = entry
                steps.append(step)
                cursor += 1
        return PlaySequence(steps)


def solve(
    instance: Instance,
    budget: int = DEFAULT_BUDGET,
    *,
    memo: bool = True,
    eager: bool = True,
    allow_duplicates: bool = False,
    prune: bool = True,
) -> OracleResult:
    """Exhaustively decide winnability.

    ``eager`` chains playable hand cards right after every play; with
    ``eager=False`` hand plays may be delayed arbitrarily and ``prune`` is
    ignored. ``prune`` plays playable deck cards immediately, never stores dead
    cards and cuts states missing a needed card.
    """
    search = _Search(instance, budget, memo, eager, allow_duplicates, prune)
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * instance.N + 1000))
    try:
        ok = search.wins(0, (), (0,) * instance.c)
    except _Budget:
        return OracleResult(Outcome.BUDGET_EXCEEDED, None, search.nodes)
    finally:
        sys.setrecursionlimit(old_limit)
    if not ok:
        return OracleResult(Outcome.NO_WIN, None, search.nodes)
    return OracleResult(Outcome.WIN, search.plan(), search.nodes)
