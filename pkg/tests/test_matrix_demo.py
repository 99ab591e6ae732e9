"""Why rank tuples model M_n: an explicit partial isometry between rank-one projections.

Everything here is exact 2x2 arithmetic over the rationals.
"""

from __future__ import annotations

from fractions import Fraction as Q

from dimlat.dimfun import d_leq
from dimlat.fdoracle import to_dim_element

Matrix = list[list[Q]]


def mul(a: Matrix, b: Matrix) -> Matrix:
    return [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)] for i in range(2)]


def adjoint(a: Matrix) -> Matrix:
    return [[a[j][i] for j in range(2)] for i in range(2)]


def trace(a: Matrix) -> Q:
    return a[0][0] + a[1][1]


def is_projection(a: Matrix) -> bool:
    return mul(a, a) == a and adjoint(a) == a


def rank_of_projection(a: Matrix) -> int:
    # trace of a projection is its rank
    return int(trace(a))


P = [[Q(1), Q(0)], [Q(0), Q(0)]]
Qm = [[Q(9, 25), Q(12, 25)], [Q(12, 25), Q(16, 25)]]
V = [[Q(3, 5), Q(0)], [Q(4, 5), Q(0)]]
ONE = [[Q(1), Q(0)], [Q(0), Q(1)]]


def test_partial_isometry_links_the_projections():
    assert is_projection(P) and is_projection(Qm)
    assert mul(adjoint(V), V) == P
    assert mul(V, adjoint(V)) == Qm


def test_equivalent_projections_have_the_same_rank_and_class():
    assert rank_of_projection(P) == rank_of_projection(Qm) == 1
    d = to_dim_element((rank_of_projection(P),), (2,))
    assert d == to_dim_element((rank_of_projection(Qm),), (2,))
    # normalised trace tr/2 equals the class value
    assert d.values[0].q == trace(Qm) / 2


def test_order_matches_subprojection():
    assert mul(Qm, ONE) == Qm and is_projection(ONE)
    assert d_leq(to_dim_element((1,), (2,)), to_dim_element((rank_of_projection(ONE),), (2,)))
