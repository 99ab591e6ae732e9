"""Ground truth on finite-dimensional algebras, and common representations.

In ``M_{n1} (+) ... (+) M_{nm}`` two projections are equivalent exactly when
their ranks agree summand by summand, so classes are rank tuples and every
operation is arithmetic on tuples.  Nothing here goes through the slice
construction or the chain machinery.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import (
    AlgebraDesc,
    AlgebraMismatch,
    IFin,
    amplify,
    embed_value,
    is_finite_type,
    unembed_value,
)
from .complattice import Explicit, family_inf, family_sup
from .dimfun import DimElement, d_add, d_leq, is_projection_class, pair_join, pair_meet
from .extval import Aleph, ExtValue, Fin, max_aleph

RankTuple = tuple[int, ...]


class NotRealizable(ValueError):
    pass


def _check_shape(shape: Sequence[int]) -> tuple[int, ...]:
    shape = tuple(shape)
    if not shape or any(not isinstance(n, int) or n < 1 for n in shape):
        raise ValueError(f"bad shape {shape!r}")
    return shape


def shape_algebra(shape: Sequence[int]) -> AlgebraDesc:
    shape = _check_shape(shape)
    return AlgebraDesc.of(*(IFin(n) for n in shape), name="M" + "+".join(map(str, shape)))


def enumerate_classes(shape: Sequence[int]) -> list[RankTuple]:
    shape = _check_shape(shape)
    return list(itertools.product(*(range(n + 1) for n in shape)))


def _check_tuple(t: RankTuple, shape: tuple[int, ...]) -> None:
    if len(t) != len(shape) or any(not 0 <= k <= n for k, n in zip(t, shape)):
        raise ValueError(f"rank tuple {t} does not fit shape {shape}")


def rank_leq(a: RankTuple, b: RankTuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def rank_meet(a: RankTuple, b: RankTuple) -> RankTuple:
    return tuple(min(x, y) for x, y in zip(a, b))


def rank_join(a: RankTuple, b: RankTuple) -> RankTuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def rank_add(a: RankTuple, b: RankTuple, shape: Sequence[int]) -> RankTuple:
    shape = _check_shape(shape)
    _check_tuple(a, shape)
    _check_tuple(b, shape)
    out = tuple(x + y for x, y in zip(a, b))
    if any(k > n for k, n in zip(out, shape)):
        raise NotRealizable(f"{a} + {b} is not realizable as an orthogonal sum in shape {shape}")
    return out


def to_dim_element(t: RankTuple, shape: Sequence[int], algebra: Optional[AlgebraDesc] = None) -> DimElement:
    """Normalised trace of a rank tuple: ``k_i / n_i`` on each summand."""
    shape = _check_shape(shape)
    _check_tuple(t, shape)
    A = algebra if algebra is not None else shape_algebra(shape)
    return DimElement(A, tuple(Fin(Fraction(k, n)) for k, n in zip(t, shape)))


def oracle_check(shape: Sequence[int]) -> tuple[bool, int, list[str]]:
    """Compare every operation against the rank model, exhaustively.

    Returns ``(ok, number_of_classes, failures)``.
    """
    shape = _check_shape(shape)
    A = shape_algebra(shape)
    classes = enumerate_classes(shape)
    image = {t: to_dim_element(t, shape, A) for t in classes}
    failures: list[str] = []
    if len(set(image.values())) != len(classes):
        failures.append("to_dim_element is not injective")
    if image[tuple(shape)] != A.unit():
        failures.append("unit tuple does not map to unit")
    for a, b in itertools.product(classes, repeat=2):
        da, db = image[a], image[b]
        if rank_leq(a, b) != d_leq(da, db):
            failures.append(f"order disagrees at {a}, {b}")
        if image[rank_meet(a, b)] != pair_meet(da, db):
            failures.append(f"meet disagrees at {a}, {b}")
        if image[rank_join(a, b)] != pair_join(da, db):
            failures.append(f"join disagrees at {a}, {b}")
        try:
            s = rank_add(a, b, shape)
        except NotRealizable:
            if d_leq(d_add(da, db), A.unit()):
                failures.append(f"sum {a}+{b} fits the unit but has no orthogonal realization")
        else:
            if image[s] != d_add(da, db):
                failures.append(f"sum disagrees at {a}, {b}")
    return not failures, len(classes), failures


# -- common sub- and super-representations ------------------------------------------


def _base_and_index(A: AlgebraDesc, B: AlgebraDesc) -> ExtValue:
    if B == A and B.origin is None:
        return Fin(1)
    if B.origin is not None and B.origin[0] == A and amplify(A, B.origin[1]) == B:
        return B.origin[1]
    raise AlgebraMismatch(f"{B.name} is not an amplification of {A.name}")


def representation_size(A: AlgebraDesc, member: DimElement) -> tuple[ExtValue, ...]:
    """Size of a representation in units where the standard form of ``A`` is 1."""
    index = _base_and_index(A, member.algebra)
    return tuple(unembed_value(t, v, index) for t, v in zip(A.types, member.values))


def smallest_index(A: AlgebraDesc, sizes: Sequence[Sequence[ExtValue]]) -> ExtValue:
    """Smallest ``Fin(m)``, else smallest aleph, holding every size below its unit."""
    need_aleph = -1
    need_fin = Fraction(1)
    for size in sizes:
        for t, v in zip(A.types, size):
            if isinstance(v, Aleph):
                if is_finite_type(t):
                    need_aleph = max(need_aleph, v.level)
                elif v.level > t.kappa:
                    need_aleph = max(need_aleph, v.level)
            elif is_finite_type(t):
                need_fin = max(need_fin, v.q)
    if need_aleph >= 0:
        return Aleph(need_aleph)
    return Fin(math.ceil(need_fin))


def _embed_size(A: AlgebraDesc, size: Sequence[ExtValue], index: ExtValue, B: AlgebraDesc) -> DimElement:
    el = DimElement(B, tuple(embed_value(t, v, index) for t, v in zip(A.types, size)))
    if not is_projection_class(el):
        raise ValueError(f"representation {el} does not fit in {B.name}")
    return el


def _common(A: AlgebraDesc, family: Sequence[DimElement], index: Optional[ExtValue], upper: bool) -> DimElement:
    if not family:
        raise ValueError("representation family is empty")
    sizes = [representation_size(A, m) for m in family]
    if index is None:
        index = smallest_index(A, sizes)
    elif isinstance(index, Aleph) and index.level > max_aleph():
        raise ValueError(f"index {index} exceeds the configured aleph range")
    B = amplify(A, index)
    members = [_embed_size(A, s, index, B) for s in sizes]
    F = Explicit(members)
    return family_sup(F) if upper else family_inf(F)


def rep_common_sub(A: AlgebraDesc, family: Sequence[DimElement], index: Optional[ExtValue] = None) -> DimElement:
    """Largest representation contained in every member of ``family``.

    Members are projection classes over ``A`` or over amplifications of it.
    The result lives over ``amplify(A, index)``, with ``index`` chosen as small
    as possible when omitted.
    """
    return _common(A, family, index, upper=False)


def rep_common_super(A: AlgebraDesc, family: Sequence[DimElement], index: Optional[ExtValue] = None) -> DimElement:
    """Smallest representation containing every member of ``family``."""
    return _common(A, family, index, upper=True)
