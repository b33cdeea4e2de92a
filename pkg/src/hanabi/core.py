"""Cards, instances, play sequences and the play-sequence verifier.

Colors and values are 1-based. Deck positions and step indices are 0-based.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    HandOverflow,
    IllegalPlay,
    InvalidInstance,
    MoveError,
    MultiplicityExceeded,
    PlayNotInHand,
)


class Card(NamedTuple):
    value: int
    color: int

    def __str__(self) -> str:
        return f"{self.value}:{self.color}"


def hand_order(card: Card) -> tuple[int, int]:
    """Canonical hand ordering: color-major, then ascending value."""
    return (card.color, card.value)


@dataclass(frozen=True)
class Instance:
    n: int
    c: int
    r: int
    h: int
    deck: tuple[Card, ...]

    def __post_init__(self):
        deck = tuple(Card(int(a), int(k)) for a, k in self.deck)
        object.__setattr__(self, "deck", deck)
        if self.n < 1 or self.c < 1 or self.r < 1 or self.h < 0:
            raise InvalidInstance(
                f"parameters out of range: n={self.n} c={self.c} r={self.r} h={self.h}"
            )
        for pos, (a, k) in enumerate(deck):
            if not 1 <= a <= self.n:
                raise InvalidInstance(f"card {pos}: value {a} out of range 1..{self.n}")
            if not 1 <= k <= self.c:
                raise InvalidInstance(f"card {pos}: color {k} out of range 1..{self.c}")
        counts = Counter(deck)
        for card, count in counts.items():
            if count > self.r:
                raise MultiplicityExceeded(
                    f"card {card} occurs {count} times, multiplicity limit is {self.r}"
                )

    @property
    def N(self) -> int:
        return len(self.deck)

    def with_hand(self, h: int) -> Instance:
        return Instance(self.n, self.c, self.r, h, self.deck)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], *, h: int, n=None, c=None, r=None):
        """Build an instance, inferring any of n, c, r left unspecified from the deck."""
        deck = tuple(Card(a, k) for a, k in pairs)
        counts = Counter(deck)
        return cls(
            n=n if n is not None else max((a for a, _ in deck), default=1),
            c=c if c is not None else max((k for _, k in deck), default=1),
            r=r if r is not None else max(counts.values(), default=1),
            h=h,
            deck=deck,
        )


class Action(enum.Enum):
    DISCARD = "d"
    STORE = "s"
    PLAY = "p"


@dataclass(frozen=True)
class Step:
    action: Action
    hand_plays: tuple[Card, ...] = ()

    def __post_init__(self):
        plays = self.hand_plays
        if type(plays) is not tuple or not all(type(c) is Card for c in plays):
            object.__setattr__(self, "hand_plays", tuple(Card(*c) for c in plays))


DISCARD = Step(Action.DISCARD)
STORE = Step(Action.STORE)
PLAY = Step(Action.PLAY)


@dataclass(frozen=True)
class PlaySequence:
    steps: tuple[Step, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]


@dataclass(frozen=True)
class GameState:
    cursor: int
    hand: tuple[Card, ...]
    progress: tuple[int, ...]

    @classmethod
    def initial(cls, c: int) -> GameState:
        return cls(0, (), (0,) * c)

    def playable(self, card: Card) -> bool:
        return self.progress[card.color - 1] == card.value - 1

    def is_complete(self, n: int) -> bool:
        return all(p == n for p in self.progress)


def _play(progress: list[int], card: Card, where: str) -> None:
    if progress[card.color - 1] != card.value - 1:
        raise IllegalPlay(
            f"cannot play {where} card {card}: color {card.color} is at {progress[card.color - 1]}"
        )
    progress[card.color - 1] = card.value


def apply_step(state: GameState, card: Card, step: Step, h: int) -> GameState:
    """Apply one step to the card at ``state.cursor``; raises a MoveError if illegal."""
    hand = list(state.hand)
    progress = list(state.progress)
    if step.action is Action.STORE:
        if len(hand) + 1 > h:
            raise HandOverflow(f"storing {card} exceeds hand size {h}")
        hand.append(card)
    elif step.action is Action.PLAY:
        _play(progress, card, "deck")
    for held in step.hand_plays:
        try:
            hand.remove(held)
        except ValueError:
            raise PlayNotInHand(f"card {held} is not in hand") from None
        _play(progress, held, "hand")
    hand.sort(key=hand_order)
    return GameState(state.cursor + 1, tuple(hand), tuple(progress))


class Reason(enum.Enum):
    ILLEGAL_PLAY = "IllegalPlay"
    HAND_OVERFLOW = "HandOverflow"
    PLAY_NOT_IN_HAND = "PlayNotInHand"
    INCOMPLETE_FIREWORKS = "IncompleteFireworks"
    LENGTH_MISMATCH = "LengthMismatch"


_REASONS = {
    IllegalPlay: Reason.ILLEGAL_PLAY,
    HandOverflow: Reason.HAND_OVERFLOW,
    PlayNotInHand: Reason.PLAY_NOT_IN_HAND,
}


@dataclass(frozen=True)
class Verdict:
    win: bool
    reason: Reason | None = None
    failing_step: int | None = None
    detail: str = field(default="", compare=False)

    def __bool__(self) -> bool:
        return self.win

    def describe(self) -> str:
        if self.win:
            return "win"
        text = self.reason.value
        if self.failing_step is not None:
            text += f" at step {self.failing_step + 1}"
        return f"{text}: {self.detail}" if self.detail else text


def replay(instance: Instance, plan: PlaySequence | Sequence[Step]) -> Iterable[GameState]:
    """Yield the state after every step; raises the first MoveError encountered."""
    state = GameState.initial(instance.c)
    for card, step in zip(instance.deck, plan):
        state = apply_step(state, card, step, instance.h)
        yield state


def verify(instance: Instance, plan: PlaySequence | Sequence[Step]) -> Verdict:
    steps = tuple(plan)
    if len(steps) != instance.N:
        return Verdict(
            False,
            Reason.LENGTH_MISMATCH,
            min(len(steps), instance.N),
            f"plan has {len(steps)} steps, deck has {instance.N} cards",
        )
    state = GameState.initial(instance.c)
    for i, (card, step) in enumerate(zip(instance.deck, steps)):
        try:
            state = apply_step(state, card, step, instance.h)
        except MoveError as exc:
            return Verdict(False, _REASONS[type(exc)], i, str(exc))
    if not state.is_complete(instance.n):
        return Verdict(False, Reason.INCOMPLETE_FIREWORKS, None, f"final progress {list(state.progress)}")
    return Verdict(True)


def peak_hand(instance: Instance, plan: PlaySequence | Sequence[Step]) -> int:
    """Largest hand observed after any step of a legal plan (after chained plays)."""
    state = GameState.initial(instance.c)
    peak = 0
    for card, step in zip(instance.deck, plan):
        if step.action is Action.STORE:
            peak = max(peak, len(state.hand) + 1)
        state = apply_step(state, card, step, instance.h)
        peak = max(peak, len(state.hand))
    return peak
