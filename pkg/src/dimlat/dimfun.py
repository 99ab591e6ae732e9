"""Dimension elements: values of the dimension function and its extension.

A :class:`DimElement` assigns one chain value to each central atom.  The
projection classes and the positive-cone classes of an algebra are subsets
singled out by :func:`is_projection_class` and :func:`is_cone_class`.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Mapping, Optional, Union

from .algebra import (
    AlgebraDesc,
    CentralPositive,
    CentralProjection,
    check_same,
    value_admissible,
)
from .extval import (
    ZERO,
    Aleph,
    ExtValue,
    Fin,
    ev_add,
    ev_scale,
    ev_sub,
    render_rational,
)


class DomainError(ValueError):
    """A value is not admissible for the requested class of elements."""


@dataclass(frozen=True)
class DimElement:
    algebra: AlgebraDesc
    values: tuple[ExtValue, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.algebra):
            raise ValueError("element must be total on the atoms")

    @classmethod
    def of(cls, algebra: AlgebraDesc, mapping: Mapping[str, ExtValue], *, kind: str = "projection") -> DimElement:
        """Validating constructor; ``kind`` is ``"projection"``, ``"cone"`` or ``"raw"``."""
        missing = [a for a in algebra.ids if a not in mapping]
        if missing:
            raise DomainError(f"missing value for atom(s) {', '.join(missing)}")
        extra = set(mapping) - set(algebra.ids)
        if extra:
            raise DomainError(f"unknown atom(s) {', '.join(sorted(extra))}")
        el = cls(algebra, tuple(mapping[a] for a in algebra.ids))
        if kind != "raw":
            el.validate(projection=(kind == "projection"))
        return el

    def validate(self, projection: bool = True) -> DimElement:
        for (atom, t), v in zip(self.algebra.atoms, self.values):
            msg = value_admissible(t, v, projection)
            if msg is not None:
                raise DomainError(f"atom {atom}: {msg}")
        return self

    def __getitem__(self, atom: str) -> ExtValue:
        return self.values[self.algebra.index(atom)]

    def items(self):
        return zip(self.algebra.ids, self.values)

    def __le__(self, other: DimElement) -> bool:
        return d_leq(self, other)

    def __add__(self, other: DimElement) -> DimElement:
        return d_add(self, other)

    def __str__(self) -> str:
        return "{ " + ", ".join(f"{a}: {v}" for a, v in self.items()) + " }"


def zero(A: AlgebraDesc) -> DimElement:
    return DimElement(A, (ZERO,) * len(A))


def is_cone_class(a: DimElement) -> bool:
    return all(value_admissible(t, v, False) is None for t, v in zip(a.algebra.types, a.values))


def is_projection_class(a: DimElement) -> bool:
    return all(value_admissible(t, v, True) is None for t, v in zip(a.algebra.types, a.values))


def d_leq(a: DimElement, b: DimElement) -> bool:
    check_same(a.algebra, b.algebra)
    return all(x <= y for x, y in zip(a.values, b.values))


def d_add(a: DimElement, b: DimElement) -> DimElement:
    check_same(a.algebra, b.algebra)
    return DimElement(a.algebra, tuple(ev_add(x, y) for x, y in zip(a.values, b.values)))


def d_scale(y: CentralPositive, a: DimElement) -> DimElement:
    check_same(y.algebra, a.algebra)
    return DimElement(
        a.algebra,
        tuple(ZERO if c == 0 else ev_scale(c, v) for c, v in zip(y.values, a.values)),
    )


def central_support(a: DimElement) -> CentralProjection:
    mask = 0
    for i, v in enumerate(a.values):
        if v != ZERO:
            mask |= 1 << i
    return CentralProjection(a.algebra, mask)


def finite_part_projection(a: DimElement) -> CentralProjection:
    """Largest central projection on which ``a`` is finite."""
    mask = 0
    for i, v in enumerate(a.values):
        if isinstance(v, Fin):
            mask |= 1 << i
    return CentralProjection(a.algebra, mask)


def trace_collapse(a: DimElement) -> dict[str, Union[Fraction, float]]:
    """The ``[0, +inf]``-valued extended trace, blind to cardinalities."""
    return {atom: (v.q if isinstance(v, Fin) else math.inf) for atom, v in a.items()}


def restrict(a: DimElement, z: CentralProjection) -> DimElement:
    """``z a``: keep values on ``z``, zero elsewhere."""
    check_same(a.algebra, z.algebra)
    return DimElement(a.algebra, tuple(v if z.mask >> i & 1 else ZERO for i, v in enumerate(a.values)))


# -- pairwise lattice operations ---------------------------------------------------


def comparison_projection(a: DimElement, b: DimElement) -> CentralProjection:
    """The central projection ``z`` with ``z a <= z b`` and ``z' a >= z' b``."""
    check_same(a.algebra, b.algebra)
    mask = 0
    for i, (x, y) in enumerate(zip(a.values, b.values)):
        if x <= y:
            mask |= 1 << i
    return CentralProjection(a.algebra, mask)


def _splice(a: DimElement, z: CentralProjection, b: DimElement) -> DimElement:
    # a on z, b off z
    return DimElement(
        a.algebra,
        tuple(x if z.mask >> i & 1 else y for i, (x, y) in enumerate(zip(a.values, b.values))),
    )


def pair_meet(a: DimElement, b: DimElement) -> DimElement:
    z = comparison_projection(a, b)
    return _splice(a, z, b)


def pair_join(a: DimElement, b: DimElement) -> DimElement:
    z = comparison_projection(a, b)
    return _splice(b, z, a)


def complement_in(a: DimElement, b: DimElement) -> DimElement:
    """A class ``c`` with ``a + c = b``; largest choice on aleph atoms."""
    if not d_leq(a, b):
        raise ValueError(f"{a} is not below {b}")
    return DimElement(a.algebra, tuple(ev_sub(y, x) for x, y in zip(a.values, b.values)))


# -- formal sums -----------------------------------------------------------------------


@dataclass(frozen=True)
class Slice:
    """One term ``g z`` of a formal sum.

    ``index`` is ``Fin(k)`` for the integer slice ``k`` (values in
    ``(k-1, k]``) or ``Aleph(i)``.  ``g`` lists the central coefficient on the
    atoms of ``support`` and is ``None`` on aleph slices.
    """

    index: ExtValue
    support: CentralProjection
    g: Optional[tuple[Fraction, ...]] = None

    def __str__(self) -> str:
        if isinstance(self.index, Aleph) or self.g is None:
            return f"{self.index}*{self.support}"
        atoms = [a for a in self.support.algebra.ids if a in self.support]
        body = ", ".join(f"{a}: {render_rational(q)}" for a, q in zip(atoms, self.g))
        return f"{self.index}*{{{body}}}"


@dataclass(frozen=True)
class FormalSum:
    algebra: AlgebraDesc
    slices: tuple[Slice, ...]

    def __str__(self) -> str:
        return " + ".join(str(s) for s in self.slices)


def slice_index(v: ExtValue) -> ExtValue:
    if isinstance(v, Aleph):
        return v
    return Fin(ceil(v.q))


@functools.lru_cache(maxsize=8192)  # elements are immutable
def to_formal_sum(a: DimElement) -> FormalSum:
    groups: dict[ExtValue, list[int]] = {}
    for i, v in enumerate(a.values):
        groups.setdefault(slice_index(v), []).append(i)
    slices = []
    for idx in sorted(groups):
        members = groups[idx]
        mask = 0
        for i in members:
            mask |= 1 << i
        g = None if isinstance(idx, Aleph) else tuple(a.values[i].q for i in members)
        slices.append(Slice(idx, CentralProjection(a.algebra, mask), g))
    return FormalSum(a.algebra, tuple(slices))


def from_formal_sum(f: FormalSum) -> DimElement:
    A = f.algebra
    values: list[Optional[ExtValue]] = [None] * len(A)
    for s in f.slices:
        check_same(A, s.support.algebra)
        positions = [i for i in range(len(A)) if s.support.mask >> i & 1]
        if isinstance(s.index, Aleph):
            for i in positions:
                if values[i] is not None:
                    raise ValueError("slices overlap")
                values[i] = s.index
            continue
        k = s.index.q
        if k.denominator != 1:
            raise ValueError(f"slice index {k} is not an integer")
        g = s.g if s.g is not None else (Fraction(0),) * len(positions)
        if len(g) != len(positions):
            raise ValueError("slice coefficient does not match its support")
        for i, q in zip(positions, g):
            if values[i] is not None:
                raise ValueError("slices overlap")
            if k == 0:
                if q != 0:
                    raise ValueError("slice 0 must have zero coefficient")
            elif not (k - 1 < q <= k):
                raise ValueError(f"coefficient {q} outside ({k - 1}, {k}] in slice {k}")
            values[i] = Fin(q)
    if any(v is None for v in values):
        raise ValueError("slices do not cover every atom")
    return DimElement(A, tuple(values))

