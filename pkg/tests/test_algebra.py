from __future__ import annotations

import itertools
from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dimlat.algebra import (
    II1,
    III,
    IFin,
    IIInf,
    IInf,
    AlgebraDesc,
    AlgebraMismatch,
    CentralPositive,
    CentralProjection,
    amplify,
    check_same,
    cp_complement,
    cp_diff,
    cp_join,
    cp_meet,
    embed_class,
    is_sigma_finite,
    unit,
    value_admissible,
)
from dimlat.dimfun import DimElement, d_leq, zero
from dimlat.extval import Aleph, Fin
from dimlat.fdoracle import enumerate_classes, to_dim_element


def three_atoms():
    return AlgebraDesc.of(II1(), IFin(2), III(0))


def cp(A, *atoms):
    return CentralProjection.of(A, atoms)


def test_central_projection_examples():
    A = three_atoms()
    assert cp_meet(cp(A, "a1", "a2"), cp(A, "a2", "a3")) == cp(A, "a2")
    assert cp_complement(cp(A)) == cp(A, "a1", "a2", "a3")
    assert cp_diff(cp(A, "a1", "a2"), cp(A, "a1")) == cp(A, "a2")
    assert cp_join(cp(A, "a1"), cp(A, "a3")).atoms == frozenset({"a1", "a3"})
    assert str(cp(A, "a3", "a1")) == "{a1, a3}"


def test_unknown_atom_rejected():
    with pytest.raises(KeyError):
        cp(three_atoms(), "zz")


@pytest.mark.parametrize("n", range(1, 6))
def test_boolean_algebra_laws_exhaustive(n):
    A = AlgebraDesc.of(*[II1()] * n)
    elems = [CentralProjection(A, m) for m in range(1 << n)]
    top, bottom = CentralProjection(A, A.full_mask), CentralProjection(A, 0)
    for x in elems:
        assert ~~x == x
        assert x | ~x == top and x & ~x == bottom
    for x, y in itertools.product(elems, repeat=2):
        assert ~(x | y) == ~x & ~y
        assert ~(x & y) == ~x | ~y
        assert x - y == x & ~y
        assert (x <= y) == ((x & y) == x)
    if n <= 4:
        for x, y, z in itertools.product(elems, repeat=3):
            assert x & (y | z) == (x & y) | (x & z)
            assert x | (y & z) == (x | y) & (x | z)


def test_units():
    assert unit(AlgebraDesc.of(II1())).values == (Fin(1),)
    assert unit(AlgebraDesc.of(III(0))).values == (Aleph(0),)
    assert unit(AlgebraDesc.of(IFin(3), IIInf(1))).values == (Fin(1), Aleph(1))


def test_kappa_and_sigma_finiteness():
    assert AlgebraDesc.of(II1()).kappa_M == Aleph(0)
    assert AlgebraDesc.of(IIInf(2), III(1)).kappa_M == Aleph(2)
    assert is_sigma_finite(IFin(2)) and is_sigma_finite(IIInf(0)) and not is_sigma_finite(III(1))


def test_algebra_validation():
    with pytest.raises(ValueError):
        AlgebraDesc(())
    with pytest.raises(ValueError):
        AlgebraDesc((("a", II1()), ("a", II1())))
    with pytest.raises(ValueError):
        IFin(0)
    with pytest.raises(ValueError):
        IInf(99)


def test_check_same():
    with pytest.raises(AlgebraMismatch):
        check_same(AlgebraDesc.of(II1()), AlgebraDesc.of(IFin(2)))


def test_admissibility_messages():
    assert value_admissible(II1(), Aleph(0)) == "aleph value not admissible on II_1 atom"
    assert value_admissible(IFin(3), Fin(Q(1, 2))) is not None
    assert value_admissible(IFin(3), Fin(Q(2, 3))) is None
    assert value_admissible(IInf(0), Fin(Q(1, 2))) is not None
    assert value_admissible(IInf(0), Fin(Q(1, 2)), projection=False) is None
    assert value_admissible(III(1), Fin(1), projection=False) is not None
    assert value_admissible(IIInf(0), Aleph(1)) is not None
    assert value_admissible(II1(), Fin(2)) is not None
    assert value_admissible(II1(), Fin(2), projection=False) is None


def test_amplify_examples():
    assert amplify(AlgebraDesc.of(IFin(2)), Fin(3)).types == (IFin(6),)
    assert amplify(AlgebraDesc.of(II1()), Aleph(0)).types == (IIInf(0),)
    assert amplify(AlgebraDesc.of(III(0)), Aleph(1)).types == (III(1),)
    assert amplify(AlgebraDesc.of(IFin(2)), Aleph(0)).types == (IInf(0),)
    A = AlgebraDesc.of(II1(), IInf(2))
    assert amplify(A, Fin(1)) is A
    with pytest.raises(ValueError):
        amplify(A, Fin(Q(1, 2)))


@given(st.integers(1, 5), st.integers(1, 5), st.integers(1, 4))
def test_amplify_composes(m, k, n):
    A = AlgebraDesc.of(IFin(n), II1(), IIInf(1))
    assert amplify(amplify(A, Fin(m)), Fin(k)) == amplify(A, Fin(m * k))


def test_embed_class_examples():
    A = AlgebraDesc.of(IFin(2))
    B = amplify(A, Fin(3))
    assert embed_class(DimElement(A, (Fin(Q(1, 2)),)), B).values == (Fin(Q(1, 6)),)
    C = AlgebraDesc.of(II1())
    D = amplify(C, Aleph(0))
    assert embed_class(unit(C), D).values == (Fin(1),)
    assert embed_class(zero(C), D) == zero(D)


def test_embed_class_rejects_unrelated_algebra():
    A = AlgebraDesc.of(II1())
    with pytest.raises(AlgebraMismatch):
        embed_class(unit(A), AlgebraDesc.of(IIInf(0)))
    with pytest.raises(ValueError):
        embed_class(DimElement(A, (Fin(2),)), amplify(A, Fin(2)))


@pytest.mark.parametrize("shape,index", [((2,), Fin(3)), ((2, 3), Fin(2)), ((1, 2), Aleph(0))])
def test_embed_class_is_an_order_embedding_on_rank_grids(shape, index):
    A = AlgebraDesc.of(*(IFin(n) for n in shape))
    B = amplify(A, index)
    classes = [to_dim_element(t, shape, A) for t in enumerate_classes(shape)]
    images = [embed_class(c, B) for c in classes]
    assert len(set(images)) == len(classes)
    for (a, ea), (b, eb) in itertools.product(zip(classes, images), repeat=2):
        assert d_leq(a, b) == d_leq(ea, eb)


def test_central_positive():
    A = three_atoms()
    y = CentralPositive.of(A, {"a1": 2, "a2": Q(1, 2), "a3": 0})
    assert y["a2"] == Q(1, 2)
    with pytest.raises(ValueError):
        CentralPositive.constant(A, -1)
