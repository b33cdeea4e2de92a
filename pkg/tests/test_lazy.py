
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import deck
from hanabi.core import Action, Instance, Step, peak_hand, verify
from hanabi.errors import MultiColor
from hanabi.lazy import filter_useless, is_useless, solve_single_color, useless_witnesses
from hanabi.oracle import solve as oracle


def one_color(values, h, n=None):
    return deck([(v, 1) for v in values], h=h, n=n, c=1, r=max(values.count(v) for v in values))


def test_useless_examples():
    inst = one_color([1, 3, 2], h=0)
    assert useless_witnesses(inst, 2) == (3,)
    assert not is_useless(one_color([2, 1, 3], h=1), 0)


def test_high_values_never_useless():
    inst = one_color([5, 4, 3, 2, 1, 5, 4], h=1)
    for i, card in enumerate(inst.deck):
        if card.value >= inst.n - inst.h:
            assert not is_useless(inst, i)


def test_filter_examples():
    assert filter_useless(one_color([1, 3, 2], h=0)).unwinnable == 2
    full = filter_useless(one_color([2, 1, 3], h=1))
    assert full.unwinnable is None and full.kept == (0, 1, 2) and full.removed == ()
    skip = filter_useless(one_color([3, 2, 1, 3], h=3))
    assert skip.kept == (0, 1, 2, 3)


def test_missing_value_reports_smallest():
    assert filter_useless(one_color([1, 4], h=1, n=4)).unwinnable == 2


def test_solve_examples():
    plan = solve_single_color(one_color([1, 2, 3], h=0))
    assert [s.action for s in plan] == [Action.PLAY] * 3
    plan = solve_single_color(one_color([2, 1, 3], h=1))
    assert list(plan) == [Step(Action.STORE), Step(Action.PLAY, ((2, 1),)), Step(Action.PLAY)]
    assert solve_single_color(one_color([1, 3, 2], h=0)) is None


def test_multicolor_rejected():
    inst = deck([(1, 1), (1, 2)], h=0)
    for fn in (filter_useless, solve_single_color):
        with pytest.raises(MultiColor):
            fn(inst)
    with pytest.raises(MultiColor):
        is_useless(inst, 0)


def test_heap_matches_recomputation():
    inst = one_color([3, 1, 4, 1, 5, 2, 6, 5, 3, 5, 8, 7, 9, 7, 9, 3, 2, 8, 4, 6, 6, 2], h=2, n=9)

    def observe(v, state):
        # the h+1 smallest surviving last positions among values above v
        higher = sorted(state.last[w] for w in range(v, inst.n + 1))[: inst.h + 1]
        assert len(state.pending) <= inst.h + 1
        assert state.heap_indices() == sorted(higher)
        for i, p in enumerate(state.prev):
            if p is not None:
                assert p < i and inst.deck[p].value == inst.deck[i].value

    filter_useless(inst, observe)


decks = st.tuples(
    st.integers(1, 5),
    st.lists(st.integers(0, 30), min_size=1, max_size=12),
    st.integers(0, 4),
)


@settings(max_examples=400, deadline=None)
@given(decks)
def test_filter_against_definition(args):
    n, raw, h = args
    values = [1 + x % n for x in raw]
    inst = Instance(n, 1, 12, h, tuple((v, 1) for v in values))
    res = filter_useless(inst)
    # every removal is useless in the deck left at that moment
    alive = list(range(inst.N))
    for idx in res.removed:
        ctx = Instance(n, 1, 12, h, tuple(inst.deck[i] for i in alive))
        assert is_useless(ctx, alive.index(idx))
        alive.remove(idx)
    if res.unwinnable is None:
        filtered = res.filtered_instance()
        assert not any(is_useless(filtered, i) for i in range(filtered.N))
    plan = solve_single_color(inst)
    assert (plan is not None) == oracle(inst).win
    if plan is not None:
        assert verify(inst, plan).win
        assert peak_hand(inst, plan) <= h


def test_large_deck_plan_verifies():
    import random
    rng = random.Random(5)
    values = [rng.randint(1, 40) for _ in range(3000)] + list(range(1, 41))
    rng.shuffle(values)
    inst = Instance(40, 1, 3040, 6, tuple((v, 1) for v in values))
    plan = solve_single_color(inst)
    if plan is not None:
        assert verify(inst, plan).win and peak_hand(inst, plan) <= 6
