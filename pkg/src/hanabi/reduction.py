"""Hanabi instances from 3-CNF formulas, plus winning plans from satisfying assignments.

Variable x_i owns colors 2i-1 (true) and 2i (false); the dummy color 2v+1 has one
card per value and is used for gadgets that pin down the free hand space. The
base construction uses r=2, h=2 and n=6m+2. Before clause gadget j every
variable color sits at o_j+5 (leading) or o_j+1 (lagging), with o_j=5(j-1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .cnf import Clause, CnfFormula
from .core import Action, Card, GameState, Instance, PlaySequence, Step, apply_step
from .errors import UnsatisfiedAssignment, UnsupportedVariant


class Variant(enum.Enum):
    BASE = "base"
    PADDED = "padded"
    H1 = "h1"


@dataclass(frozen=True)
class Span:
    name: str
    start: int  # 0-based, inclusive
    end: int  # 0-based, exclusive

    def __contains__(self, pos: int) -> bool:
        return self.start <= pos < self.end


def literal_color(literal: int) -> int:
    i = abs(literal)
    return 2 * i - 1 if literal > 0 else 2 * i


def clause_colors(clause: Clause) -> tuple[int, ...]:
    return tuple(sorted(literal_color(lit) for lit in clause))


def offset(j: int) -> int:
    """Progress offset of clause gadget j (1-based)."""
    return 5 * (j - 1)


def variable_gadget(i: int) -> list[Card]:
    t, f = 2 * i - 1, 2 * i
    return [Card(2, t), Card(2, f), Card(1, t), Card(3, t), Card(4, t), Card(5, t),
            Card(1, f), Card(3, f), Card(4, f), Card(5, f)]


def build_variable_phase(v: int, *, hand_reduction: bool = True) -> list[Card]:
    cards = [card for i in range(1, v + 1) for card in variable_gadget(i)]
    if not hand_reduction:
        return cards
    d = 2 * v + 1
    return [Card(2, d)] + cards + [Card(1, d)]


def build_hand_dump(i: int, dummy: int) -> list[Card]:
    """Three dummy cards that can only all be played if the hand is empty on arrival."""
    return [Card(i + 1, dummy), Card(i + 2, dummy), Card(i, dummy)]


def build_hand_reduction(i: int, dummy: int, payload: Sequence[Card] = (), width: int = 1) -> list[Card]:
    """``width`` stored dummy cards held across ``payload``, released by (i, dummy)."""
    opening = [Card(i + w, dummy) for w in range(1, width + 1)]
    return opening + list(payload) + [Card(i, dummy)]


def clause_gadget_blocks(j: int, clause: Clause, v: int, *, h1: bool = False):
    """Sub-blocks of clause gadget C_j as (name, cards) pairs."""
    o = offset(j)
    d = 2 * v + 1
    assoc = clause_colors(clause)
    others = [k for k in range(1, 2 * v + 1) if k not in assoc]
    advance = [Card(o + x, k) for k in assoc for x in range(6, 11)]
    if h1:
        # Hand size 1 cannot hold two cards across the long run, so leading and lagging
        # colors get separate runs and the lagging runs sit inside a hand reduction:
        # nothing can be kept back to chain past o+6.
        base = 6 * (j - 1)
        leading = [Card(o + x, k) for k in others for x in range(6, 11)]
        lagging = [Card(o + x, k) for k in others for x in range(2, 7)]
        middle = leading + build_hand_reduction(base + 3, d, lagging)
        dump = build_hand_reduction(base + 5, d)
    else:
        middle = [Card(o + x, k) for k in others for x in (5, 6, 7, 8, 9, 10, 2, 3, 4)]
        dump = build_hand_dump(6 * (j - 1) + 6, d)
    literals = [Card(o + 3, k) for k in assoc]
    literals += [Card(o + x, k) for k in assoc for x in (2, 4, 5, 6)]
    blocks = [("advance", advance), ("others", middle), ("dump", dump), ("literals", literals)]
    if h1:
        extra = [Card(o + 4, k) for k in assoc]
        extra += [Card(o + x, k) for k in assoc for x in (3, 5, 6)]
        blocks.append(("extra", extra))
    return blocks


def pre_clause_dump(j: int, v: int, *, h1: bool = False) -> list[Card]:
    """Dummy cards placed before C_j so nothing stored earlier survives into it."""
    d = 2 * v + 1
    if h1:
        return build_hand_reduction(6 * (j - 1) + 1, d)
    return build_hand_dump(6 * (j - 1) + 3, d)


def build_clause_gadget(j: int, clause: Clause, v: int, *, h1: bool = False) -> list[Card]:
    return [card for _, cards in clause_gadget_blocks(j, clause, v, h1=h1) for card in cards]


@dataclass(frozen=True)
class ReductionArtifacts:
    formula: CnfFormula
    instance: Instance
    variant: Variant
    color_map: tuple[tuple[int, int], ...]  # per variable: (positive color, negated color)
    dummy: int
    offsets: tuple[int, ...]
    spans: tuple[Span, ...]

    def span(self, name: str) -> Span:
        for s in self.spans:
            if s.name == name:
                return s
        raise KeyError(name)

    def spans_text(self) -> str:
        lines = [f"# variant {self.variant.value}"]
        lines += [f"block {s.name} {s.start + 1} {s.end}" for s in self.spans]
        lines += [f"colormap {i} {pos} {neg}" for i, (pos, neg) in enumerate(self.color_map, start=1)]
        lines += [f"offset {j} {o}" for j, o in enumerate(self.offsets, start=1)]
        return "\n".join(lines) + "\n"


class _Builder:
    def __init__(self, dummy: int, copies: int, n: int):
        self.n = n
        self.deck: list[Card] = []
        self.spans: list[Span] = []
        self.dummy = dummy
        self.copies = copies
        self.seen: set[Card] = set()

    def add(self, name: str, cards: Sequence[Card]) -> None:
        start = len(self.deck)
        for card in cards:
            if card.value > self.n:
                # the last gadget overshoots n when m <= 2; those cards are never needed
                continue
            self.deck.append(card)
            if card.color != self.dummy and card not in self.seen:
                self.seen.add(card)
                self.deck.extend([card] * self.copies)
        self.spans.append(Span(name, start, len(self.deck)))

    def enclose(self, name: str, start: int) -> None:
        self.spans.append(Span(name, start, len(self.deck)))


def _resolve(variant, r, h) -> tuple[Variant, int, int]:
    variant = Variant(variant) if variant is not None else None
    if variant is Variant.H1 or (h == 1 and variant is not Variant.PADDED):
        h = 1 if h is None else h
        r = 3 if r is None else r
        if h != 1:
            raise UnsupportedVariant(f"the h1 variant has hand size 1, not {h}")
        if r < 3:
            raise UnsupportedVariant("hand size 1 with multiplicity 2 is an open case")
        return Variant.H1, r, h
    r = 2 if r is None else r
    h = 2 if h is None else h
    if h < 2 or r < 2:
        raise UnsupportedVariant(f"no reduction for r={r}, h={h}")
    return (Variant.BASE if (r, h) == (2, 2) else Variant.PADDED), r, h


def reduce(formula: CnfFormula, variant: Variant | str | None = None,
           r: int | None = None, h: int | None = None) -> ReductionArtifacts:
    """Build the instance that is winnable iff ``formula`` is satisfiable."""
    variant, r, h = _resolve(variant, r, h)
    v, m = formula.num_vars, formula.m
    d = 2 * v + 1
    h1 = variant is Variant.H1
    copies = r - (3 if h1 else 2)
    wrap = 0 if h1 else h - 2
    top_dummy = 6 * m + 2  # dummy values used by the body
    n = top_dummy + (wrap + 1 if wrap else 0)
    b = _Builder(d, copies, n)

    if wrap:
        b.add("wrap-open", [Card(top_dummy + w, d) for w in range(2, wrap + 2)])
    b.add("sigma1", build_variable_phase(v, hand_reduction=not h1))
    for j, clause in enumerate(formula.clauses, start=1):
        b.add(f"dump{j}", pre_clause_dump(j, v, h1=h1))
        start = len(b.deck)
        for name, cards in clause_gadget_blocks(j, clause, v, h1=h1):
            b.add(f"clause{j}.{name}", cards)
        b.enclose(f"clause{j}", start)
    if h1:
        b.add("dummy-tail", [Card(x, d) for x in range(6 * m + 1, top_dummy + 1)])
    b.add("tail", [Card(x, k) for x in range(offset(m) + 7, n + 1) for k in range(1, 2 * v + 1)])
    if wrap:
        b.add("wrap-close", [Card(top_dummy + 1, d)])

    instance = Instance(n=n, c=d, r=r, h=h, deck=tuple(b.deck))
    return ReductionArtifacts(
        formula=formula,
        instance=instance,
        variant=variant,
        color_map=tuple((2 * i - 1, 2 * i) for i in range(1, v + 1)),
        dummy=d,
        offsets=tuple(offset(j) for j in range(1, m + 1)),
        spans=tuple(b.spans),
    )


def _first(deck, span: Span, card: Card) -> int:
    for pos in range(span.start, span.end):
        if deck[pos] == card:
            return pos
    raise LookupError(f"{card} not found in block {span.name}")


def _store_positions(art: ReductionArtifacts, assignment: Sequence[bool]) -> set[int]:
    deck = art.instance.deck
    d = art.dummy
    h1 = art.variant is Variant.H1
    leading = {2 * i - 1 if val else 2 * i for i, val in enumerate(assignment, start=1)}
    keep: set[int] = set()
    for s in art.spans:
        if s.name == "wrap-open":
            keep.update(range(s.start, s.end))
    sigma1 = art.span("sigma1")
    if not h1:
        keep.add(_first(deck, sigma1, Card(2, d)))
    for k in sorted(leading):
        keep.add(_first(deck, sigma1, Card(2, k)))
    for j, clause in enumerate(art.formula.clauses, start=1):
        o = offset(j)
        dumps = [art.span(f"dump{j}"), art.span(f"clause{j}.dump")]
        for s in dumps:
            keep.update(range(s.start, s.start + (1 if h1 else 2)))
        assoc = clause_colors(clause)
        others = art.span(f"clause{j}.others")
        if h1:
            keep.add(next(p for p in range(others.start, others.end) if deck[p].color == d))
        else:
            for k in range(1, 2 * len(assignment) + 1):
                if k not in assoc and k not in leading:
                    keep.add(_first(deck, others, Card(o + 5, k)))
                    keep.add(_first(deck, others, Card(o + 6, k)))
        false_colors = [k for k in assoc if k not in leading]
        literals = art.span(f"clause{j}.literals")
        if not h1:
            for k in false_colors:
                keep.add(_first(deck, literals, Card(o + 3, k)))
        else:
            if false_colors:
                keep.add(_first(deck, literals, Card(o + 3, false_colors[0])))
            if len(false_colors) > 1:
                keep.add(_first(deck, literals, Card(o + 4, false_colors[1])))
    return keep


def assignment_plan(art: ReductionArtifacts, assignment: Sequence[bool]) -> PlaySequence:
    """Winning plan that realizes a satisfying assignment on the generated deck.

    Plays every playable card at once (chaining stored cards of its color), stores
    only the cards each gadget needs held, and discards the rest.
    """
    assignment = tuple(bool(x) for x in assignment)
    if len(assignment) != art.formula.num_vars:
        raise UnsatisfiedAssignment(
            f"assignment has {len(assignment)} values, formula has {art.formula.num_vars} variables"
        )
    for j, clause in enumerate(art.formula.clauses, start=1):
        if not any(assignment[abs(lit) - 1] == (lit > 0) for lit in clause):
            raise UnsatisfiedAssignment(f"clause {j} {list(clause)} is not satisfied")
    keep = _store_positions(art, assignment)
    inst = art.instance
    progress = [0] * (inst.c + 1)
    hand: set[Card] = set()
    steps = []
    for pos, card in enumerate(inst.deck):
        a, k = card
        if progress[k] == a - 1:
            top = a
            chained = []
            while Card(top + 1, k) in hand:
                top += 1
                hand.remove(Card(top, k))
                chained.append(Card(top, k))
            progress[k] = top
            steps.append(Step(Action.PLAY, tuple(chained)))
        elif pos in keep and card not in hand:
            hand.add(card)
            steps.append(Step(Action.STORE))
        else:
            steps.append(Step(Action.DISCARD))
    return PlaySequence(steps)


def progress_trace(instance: Instance, plan: PlaySequence) -> list[tuple[int, ...]]:
    """Progress vector before each step and after the last one."""
    state = GameState.initial(instance.c)
    trace = [state.progress]
    for card, step in zip(instance.deck, plan):
        state = apply_step(state, card, step, instance.h)
        trace.append(state.progress)
    return trace
