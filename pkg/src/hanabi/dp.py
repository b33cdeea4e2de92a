"""General-case dynamic program over (cards drawn, hand, progress of colors 1..c-1).

Each entry holds the largest progress reachable in the last color c under
those constraints. Layers are built forward and sparsely: only keys with a
finite value are materialized, starting from the single key (empty hand,
zero progress) with value 0. The forward transitions are the exact inverse
of the backward discard/store/play recurrence, including its set-union form
for chained plays, so a target hand may keep a copy of a chained card.
Those keys can never empty their hand; ``dominance=True`` drops them.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations

from .core import Action, Card, Instance, PlaySequence, Step, hand_order
from .errors import NoJournal, ResourceLimit

DEFAULT_STATE_LIMIT = 10**8

Hand = tuple[Card, ...]
DpKey = tuple[Hand, tuple[int, ...]]


def state_limit_from_env(default: int = DEFAULT_STATE_LIMIT) -> int:
    raw = os.environ.get("HANABI_STATE_LIMIT")
    return int(raw) if raw else default


def canonical(cards) -> Hand:
    return tuple(sorted(cards, key=hand_order))


@dataclass
class DpTable:
    instance: Instance
    final: dict[DpKey, int]
    # journal[s][key] = (action, predecessor key, chained cards) for the card at position s
    journal: list[dict] | None = None
    peak_layer: int = 0
    layer_sizes: list[int] = field(default_factory=list)

    @property
    def goal(self) -> DpKey:
        inst = self.instance
        return ((), (inst.n,) * (inst.c - 1))

    @property
    def winnable(self) -> bool:
        return self.final.get(self.goal) == self.instance.n


def _is_junk(key: DpKey, value: int, c: int) -> bool:
    hand, played = key
    for card in hand:
        reached = value if card.color == c else played[card.color - 1]
        if card.value <= reached:
            return True
    return False


def _chain_targets(hand: Hand, card: Card):
    """Yield (t, target hand) for each chain length t the predecessor hand supports.

    Target hands are every H with H | chain == hand, i.e. hand minus the chain
    plus any subset of the chain.
    """
    a, k = card
    chain: list[Card] = []
    t = 0
    while True:
        rest = tuple(x for x in hand if x not in chain)
        for size in range(len(chain) + 1):
            for keep in combinations(chain, size):
                yield t, canonical(rest + keep) if keep else rest
        nxt = Card(a + t + 1, k)
        if nxt not in hand:
            return
        chain.append(nxt)
        t += 1


def _transitions(key: DpKey, value: int, card: Card, c: int, h: int):
    """Yield (action, target key, target value, chained cards)."""
    hand, played = key
    a, k = card
    yield Action.DISCARD, key, value, ()
    if card not in hand and len(hand) < h:
        yield Action.STORE, (canonical(hand + (card,)), played), value, ()
    if k < c:
        if played[k - 1] != a - 1:
            return
        for t, target in _chain_targets(hand, card):
            progressed = played[: k - 1] + (a + t,) + played[k:]
            chained = tuple(Card(v, k) for v in range(a + 1, a + t + 1))
            yield Action.PLAY, (target, progressed), value, chained
    else:
        if value != a - 1:
            return
        for t, target in _chain_targets(hand, card):
            if t > h:
                break
            chained = tuple(Card(v, k) for v in range(a + 1, a + t + 1))
            yield Action.PLAY, (target, played), a + t, chained


def dp_decide(
    instance: Instance,
    *,
    journal: bool = True,
    state_limit: int | None = None,
    dominance: bool = False,
) -> tuple[bool, DpTable]:
    """Run the table forward over the whole deck; True iff every color can reach n."""
    if state_limit is None:
        state_limit = state_limit_from_env()
    c, h = instance.c, instance.h
    layer: dict[DpKey, int] = {((), (0,) * (c - 1)): 0}
    table = DpTable(instance, layer, [] if journal else None, 1, [1])
    for s, card in enumerate(instance.deck):
        nxt: dict[DpKey, int] = {}
        back = {} if journal else None
        for key, value in layer.items():
            for action, target, tval, chained in _transitions(key, value, card, c, h):
                if dominance and _is_junk(target, tval, c):
                    continue
                old = nxt.get(target)
                if old is None or tval > old:
                    nxt[target] = tval
                    if back is not None:
                        back[target] = (action, key, chained)
        if len(nxt) > state_limit:
            raise ResourceLimit(
                f"layer {s + 1} holds {len(nxt)} states, limit is {state_limit}"
            )
        layer = nxt
        table.layer_sizes.append(len(layer))
        table.peak_layer = max(table.peak_layer, len(layer))
        if back is not None:
            table.journal.append(back)
    table.final = layer
    return table.winnable, table


def dp_layers(instance: Instance, *, dominance: bool = False) -> list[dict[DpKey, int]]:
    """Every forward layer, for inspection on small decks."""
    c, h = instance.c, instance.h
    layers = [{((), (0,) * (c - 1)): 0}]
    for card in instance.deck:
        nxt: dict[DpKey, int] = {}
        for key, value in layers[-1].items():
            for _, target, tval, _ in _transitions(key, value, card, c, h):
                if dominance and _is_junk(target, tval, c):
                    continue
                if tval > nxt.get(target, -1):
                    nxt[target] = tval
        layers.append(nxt)
    return layers


def dp_extract_plan(table: DpTable) -> PlaySequence | None:
    if table.journal is None:
        raise NoJournal("table was built without backpointers")
    if not table.winnable:
        return None
    key = table.goal
    steps = []
    for back in reversed(table.journal):
        action, key, chained = back[key]
        steps.append(Step(action, chained))
    steps.reverse()
    return PlaySequence(steps)


def solve_dp(instance: Instance, **options) -> PlaySequence | None:
    ok, table = dp_decide(instance, journal=True, **options)
    return dp_extract_plan(table) if ok else None
