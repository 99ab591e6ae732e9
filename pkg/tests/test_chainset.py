from __future__ import annotations

from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rationals
from dimlat.chainset import NATURALS, ChainSet, EmptyChainSet, Interval, Progression, chain_glb, chain_lub
from dimlat.extval import Aleph, Fin


def test_lub_of_naturals_is_aleph_0():
    assert chain_lub(ChainSet(progressions=(NATURALS,))) == Aleph(0)


def test_lub_of_finite_set_with_aleph():
    s = ChainSet.of_values([Fin(Q(1, 2)), Fin(Q(3, 4)), Aleph(1)])
    assert chain_lub(s) == Aleph(1)


def test_glb_of_half_open_interval_is_the_open_end():
    assert chain_glb(ChainSet.interval(0, 1, lo_closed=False)) == Fin(0)
    assert chain_glb(ChainSet.interval(1, 2, lo_closed=False)) == Fin(1)


def test_empty_conventions():
    assert chain_lub(ChainSet()) == Fin(0)
    with pytest.raises(EmptyChainSet):
        chain_glb(ChainSet())


def test_glb_of_alephs_only():
    assert chain_glb(ChainSet(alephs=frozenset({2, 1}))) == Aleph(1)


def test_lub_of_unbounded_interval():
    assert chain_lub(ChainSet(intervals=(Interval(Q(0), None),))) == Aleph(0)


def test_canonical_form_merges_and_absorbs():
    a = ChainSet(intervals=(Interval(Q(0), Q(1), True, False), Interval(Q(1), Q(2), False, True)),
                 points=frozenset({Q(1), Q(3, 2)}))
    assert a == ChainSet.interval(0, 2)
    b = ChainSet(intervals=(Interval(Q(2), None),), progressions=(NATURALS,))
    assert b == ChainSet(intervals=(Interval(Q(2), None),), points=frozenset({Q(0), Q(1)}))
    assert ChainSet.interval(1, 1) == ChainSet(points=frozenset({Q(1)}))


def test_progression_subsumption():
    evens = Progression(Q(0), Q(2))
    s = ChainSet(progressions=(evens, NATURALS))
    assert s == ChainSet(progressions=(NATURALS,))


def test_membership():
    s = ChainSet(intervals=(Interval(Q(0), Q(1), False, True),), progressions=(Progression(Q(5), Q(1, 2)),),
                 alephs=frozenset({0}))
    assert Fin(Q(1, 2)) in s
    assert Fin(0) not in s
    assert Fin(Q(11, 2)) in s
    assert Fin(Q(21, 4)) not in s
    assert Aleph(0) in s and Aleph(1) not in s


def test_subset():
    naturals = ChainSet(progressions=(NATURALS,))
    ray = ChainSet(intervals=(Interval(Q(0), None),))
    assert naturals <= ray
    assert not ray <= naturals
    assert ChainSet.interval(0, 1) <= ChainSet(intervals=(Interval(Q(0), Q(1), True, False),), points=frozenset({Q(1)}))
    gap = ChainSet.interval(0, 1, hi_closed=False) | ChainSet.interval(1, 2, lo_closed=False)
    assert not ChainSet.interval(0, 2) <= gap
    assert Progression(Q(0), Q(2)).is_subset_of(NATURALS)
    assert ChainSet(progressions=(Progression(Q(1), Q(2)),)) <= naturals


def test_restrict_le():
    s = ChainSet(progressions=(NATURALS,), alephs=frozenset({0, 1}))
    assert s.restrict_le(Fin(Q(5, 2))) == ChainSet.of_values([Fin(0), Fin(1), Fin(2)])
    assert s.restrict_le(Aleph(0)) == ChainSet(progressions=(NATURALS,), alephs=frozenset({0}))


def test_topological_closure():
    assert ChainSet.interval(0, 1, False, False).topological_closure() == ChainSet.interval(0, 1)
    ray = ChainSet(intervals=(Interval(Q(1), None, False, False),))
    assert ray.topological_closure() == ChainSet(intervals=(Interval(Q(1), None),))


def test_rendering():
    s = ChainSet(intervals=(Interval(Q(0), Q(1)),), points=frozenset({Q(2)}), progressions=(Progression(Q(3), Q(1)),),
                 alephs=frozenset({0}))
    assert str(s) == "{[0,1], 2, progression(3,1), aleph 0}"
    assert str(ChainSet(progressions=(NATURALS,))) == "{naturals}"


@given(st.lists(rationals, min_size=1, max_size=6), st.sets(st.integers(0, 3), max_size=3))
def test_finite_sets_agree_with_max_and_min(qs, levels):
    vals = [Fin(q) for q in qs] + [Aleph(l) for l in levels]
    s = ChainSet.of_values(vals)
    assert chain_lub(s) == max(vals)
    assert chain_glb(s) == min(vals)
    assert all(v in s for v in vals)
    assert s.elements() == sorted(set(vals))


@given(rationals, rationals, st.booleans(), st.booleans(), rationals)
def test_interval_bounds_and_membership(a, b, lc, hc, x):
    lo, hi = min(a, b), max(a, b)
    if lo == hi and not (lc and hc):
        return
    s = ChainSet.interval(lo, hi, lc, hc)
    assert chain_lub(s) == Fin(hi)
    assert chain_glb(s) == Fin(lo)
    inside = (lo < x or (lc and x == lo)) and (x < hi or (hc and x == hi))
    assert (Fin(x) in s) == inside
    closed = s.topological_closure()
    assert s <= closed and closed == closed.topological_closure()
