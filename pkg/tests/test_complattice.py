from __future__ import annotations

from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import algebra_and_elements
from dimlat.algebra import II1, III, IIInf, AlgebraDesc
from dimlat.chainset import NATURALS, ChainSet
from dimlat.complattice import (
    Described,
    Explicit,
    InvalidFamily,
    empty_inf,
    empty_sup,
    family_inf,
    family_sup,
    is_least_upper_bound,
    is_upper_bound,
    pointwise_inf,
    pointwise_sup,
    sup_formal_sum,
)
from dimlat.dimfun import DimElement, d_leq, pair_join, pair_meet, zero
from dimlat.extval import Aleph, Fin


def el(A, *vals):
    return DimElement(A, tuple(vals))


def test_sup_of_two_elements_on_two_atoms():
    A = AlgebraDesc.of(IIInf(0), IIInf(0))
    F = Explicit([el(A, Fin(Q(1, 2)), Fin(3)), el(A, Fin(2), Fin(1))])
    assert family_sup(F) == el(A, Fin(2), Fin(3))
    assert str(sup_formal_sum(F)) == "2*{a1: 2} + 3*{a2: 3}"


def test_sup_of_naturals_is_aleph_0():
    A = AlgebraDesc.of(IIInf(1))
    F = Described.of(A, {"a1": ChainSet(progressions=(NATURALS,))})
    assert family_sup(F) == el(A, Aleph(0))


def test_singleton_family():
    A = AlgebraDesc.of(II1(), III(1))
    a = el(A, Fin(Q(1, 3)), Aleph(1))
    assert family_sup([a]) == a and family_inf([a]) == a


def test_inf_examples():
    A = AlgebraDesc.of(IIInf(0))
    assert family_inf(Explicit([el(A, Fin(Q(1, 2))), el(A, Fin(2))])) == el(A, Fin(Q(1, 2)))
    B = AlgebraDesc.of(III(1))
    assert family_inf(Explicit([el(B, Aleph(1)), el(B, Aleph(0))])) == el(B, Aleph(0))
    F = Described.of(A, {"a1": ChainSet.interval(1, 2, lo_closed=False)})
    assert family_inf(F) == el(A, Fin(1))
    assert not F.chains[0].contains(Fin(1))


def test_empty_family_bounds():
    A = AlgebraDesc.of(II1(), IIInf(2))
    assert empty_sup(A) == zero(A)
    assert empty_inf(A) == A.unit()
    with pytest.raises(InvalidFamily):
        family_sup(Explicit([]))


def test_family_validation():
    A = AlgebraDesc.of(II1())
    with pytest.raises(InvalidFamily):
        family_sup(Explicit([el(A, Aleph(0))]))
    with pytest.raises(InvalidFamily):
        family_sup(Described.of(A, {"a1": ChainSet()}))
    with pytest.raises(InvalidFamily):
        family_sup(Described.of(A, {"a1": ChainSet.interval(0, 2)}))
    with pytest.raises(InvalidFamily):
        Described.of(A, {})


def test_upper_bound_helpers():
    A = AlgebraDesc.of(IIInf(0))
    F = Explicit([el(A, Fin(1)), el(A, Fin(2))])
    h = el(A, Fin(3))
    grid = [el(A, Fin(k)) for k in range(5)]
    assert is_upper_bound(h, F)
    assert not is_least_upper_bound(h, F, grid)
    assert is_least_upper_bound(family_sup(F), F, grid)
    assert is_upper_bound(A.unit(), F)


def test_described_bounds_helpers():
    A = AlgebraDesc.of(IIInf(1))
    F = Described.of(A, {"a1": ChainSet(progressions=(NATURALS,))})
    assert not is_upper_bound(el(A, Fin(100)), F)
    assert is_upper_bound(el(A, Aleph(0)), F)


@given(algebra_and_elements(4))
def test_slice_construction_matches_pointwise(case):
    _, members = case
    F = Explicit(members)
    assert family_sup(F) == pointwise_sup(F)
    assert family_inf(F) == pointwise_inf(F)


@given(algebra_and_elements(4, cone=True))
def test_slice_construction_matches_pointwise_on_cone(case):
    _, members = case
    F = Explicit(members)
    assert family_sup(F) == pointwise_sup(F)
    assert family_inf(F) == pointwise_inf(F)
    for m in members:
        assert d_leq(m, family_sup(F)) and d_leq(family_inf(F), m)


@given(algebra_and_elements(2))
def test_two_element_families_agree_with_pair_operations(case):
    _, (a, b) = case
    assert family_sup([a, b]) == pair_join(a, b)
    assert family_inf([a, b]) == pair_meet(a, b)


@given(algebra_and_elements(5), st.integers(1, 5))
def test_monotone_in_the_family(case, k):
    _, members = case
    small, big = members[:k], members
    assert d_leq(family_sup(small), family_sup(big))
    assert d_leq(family_inf(big), family_inf(small))


@given(algebra_and_elements(3))
def test_formal_sum_slices_partition_the_atoms(case):
    A, members = case
    f = sup_formal_sum(members)
    mask = 0
    for s in f.slices:
        assert not s.support.mask & mask
        mask |= s.support.mask
        if isinstance(s.index, Fin) and s.index.q > 0:
            assert all(s.index.q - 1 < g <= s.index.q for g in s.g)
    assert mask == A.full_mask
