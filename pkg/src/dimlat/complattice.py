"""Suprema and infima of arbitrary families of dimension elements.

Explicit families go through the slice construction on formal sums: for each
slice index ``k`` (integers first, then alephs) compute the central projection
``y_le[k]`` where every member (for ``sup``) or some member (for ``inf``) sits
in a slice ``<= k``, peel off the new part ``z_k``, and read the coefficient
on ``z_k`` off the members living in slice ``k`` there.

Described families are per-atom value sets; on a finite atomic center their
bounds are computed atom by atom, which also serves as the independent check
for the slice construction (:func:`pointwise_sup`, :func:`pointwise_inf`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .algebra import AlgebraDesc, CentralProjection, check_same, cone_domain, projection_domain
from .chainset import ChainSet, chain_glb, chain_lub
from .dimfun import (
    DimElement,
    FormalSum,
    Slice,
    d_leq,
    from_formal_sum,
    is_cone_class,
    to_formal_sum,
    zero,
)
from .extval import Aleph, ExtValue, Fin, max_aleph


class InvalidFamily(ValueError):
    pass


@dataclass(frozen=True)
class Explicit:
    members: tuple[DimElement, ...]

    def __init__(self, members: Iterable[DimElement]) -> None:
        object.__setattr__(self, "members", tuple(members))

    @property
    def algebra(self) -> AlgebraDesc:
        return self.members[0].algebra

    def validate(self, cone: bool = True) -> None:
        if not self.members:
            raise InvalidFamily("explicit family is empty; use zero()/unit() for the empty bounds")
        A = self.members[0].algebra
        for m in self.members:
            check_same(A, m.algebra)
            if cone and not is_cone_class(m):
                raise InvalidFamily(f"member {m} is not a positive-cone class")


@dataclass(frozen=True)
class Described:
    algebra: AlgebraDesc
    chains: tuple[ChainSet, ...]

    @classmethod
    def of(cls, algebra: AlgebraDesc, mapping: Mapping[str, ChainSet]) -> Described:
        missing = [a for a in algebra.ids if a not in mapping]
        if missing:
            raise InvalidFamily(f"no value set for atom(s) {', '.join(missing)}")
        return cls(algebra, tuple(mapping[a] for a in algebra.ids))

    def validate(self, cone: bool = False) -> None:
        domain = cone_domain if cone else projection_domain
        for (atom, t), chain in zip(self.algebra.atoms, self.chains):
            if chain.is_empty:
                raise InvalidFamily(f"value set for atom {atom} is empty")
            if not chain.issubset(domain(t)):
                raise InvalidFamily(f"value set {chain} for atom {atom} leaves the admissible values of {t}")


FamilySpec = Union[Explicit, Described]


def _as_family(F) -> FamilySpec:
    if isinstance(F, (Explicit, Described)):
        return F
    return Explicit(F)


# -- the slice construction -----------------------------------------------------------


def _key(index: ExtValue) -> tuple[int, int]:
    # plain-int slice key: hashing small int tuples is much cheaper than Fractions
    return (1, index.level) if isinstance(index, Aleph) else (0, int(index.q))


def _decompose(members: Sequence[DimElement]):
    """Per member: ``{slice key: (mask, {atom position: coefficient})}``."""
    out = []
    for m in members:
        parts = {}
        for s in to_formal_sum(m).slices:
            coeff = {}
            if s.g is not None:
                positions = [i for i in range(len(m.algebra)) if s.support.mask >> i & 1]
                coeff = dict(zip(positions, s.g))
            parts[_key(s.index)] = (s.support.mask, coeff)
        out.append(parts)
    return out


def _slice_keys(decomposed) -> list[tuple[int, int]]:
    top = max((k for parts in decomposed for kind, k in parts if kind == 0), default=0)
    return [(0, k) for k in range(top + 1)] + [(1, i) for i in range(max_aleph() + 1)]


def _slice_construction(members: Sequence[DimElement], upper: bool) -> FormalSum:
    A = members[0].algebra
    full = A.full_mask
    decomposed = _decompose(members)

    # running union of each member's slices <= k
    below_member = [0] * len(decomposed)
    slices = []
    covered = 0  # join of y_le over the indices already visited
    for k in _slice_keys(decomposed):
        y = full if upper else 0
        for j, parts in enumerate(decomposed):
            if k in parts:
                below_member[j] |= parts[k][0]
            y = (y & below_member[j]) if upper else (y | below_member[j])
        z = y & ~covered
        covered |= y
        if not z:
            continue
        support = CentralProjection(A, z)
        kind, level = k
        if kind == 1:
            slices.append(Slice(Aleph(level), support))
            continue
        positions = [i for i in range(len(A)) if z >> i & 1]
        g = []
        for i in positions:
            # contributors: members sitting in slice k at atom i.  For sup,
            # members outside slice k there lie in lower slices, so their
            # values are <= k-1 and cannot win the maximum.  For inf, members
            # outside slice k lie strictly higher and cannot win the minimum.
            coeffs = [parts[k][1][i] for parts in decomposed if k in parts and parts[k][0] >> i & 1]
            if level == 0:
                g.append(Fraction(0))
            elif upper:
                g.append(max(coeffs))
            else:
                g.append(min(coeffs))
        slices.append(Slice(Fin(level), support, tuple(g)))
    return FormalSum(A, tuple(slices))


def sup_formal_sum(F, *, validate: bool = True) -> FormalSum:
    F = _as_family(F)
    if not isinstance(F, Explicit):
        raise TypeError("the slice construction needs an explicit family")
    F.validate(cone=validate)
    return _slice_construction(F.members, upper=True)


def inf_formal_sum(F, *, validate: bool = True) -> FormalSum:
    F = _as_family(F)
    if not isinstance(F, Explicit):
        raise TypeError("the slice construction needs an explicit family")
    F.validate(cone=validate)
    return _slice_construction(F.members, upper=False)


def family_sup(F, *, validate: bool = True) -> DimElement:
    """Least upper bound of a family (explicit or described)."""
    F = _as_family(F)
    if isinstance(F, Described):
        if validate:
            F.validate()
        return DimElement(F.algebra, tuple(chain_lub(c) for c in F.chains))
    return from_formal_sum(sup_formal_sum(F, validate=validate))


def family_inf(F, *, validate: bool = True) -> DimElement:
    """Greatest lower bound of a family (explicit or described)."""
    F = _as_family(F)
    if isinstance(F, Described):
        if validate:
            F.validate()
        return to_canonical(DimElement(F.algebra, tuple(chain_glb(c) for c in F.chains)))
    return from_formal_sum(inf_formal_sum(F, validate=validate))


def to_canonical(a: DimElement) -> DimElement:
    return from_formal_sum(to_formal_sum(a))


def empty_sup(A: AlgebraDesc) -> DimElement:
    return zero(A)


def empty_inf(A: AlgebraDesc) -> DimElement:
    return A.unit()


# -- independent per-atom path ----------------------------------------------------------


def _atom_chains(F: FamilySpec) -> tuple[ChainSet, ...]:
    if isinstance(F, Described):
        return F.chains
    A = F.algebra
    return tuple(ChainSet.of_values(m.values[i] for m in F.members) for i in range(len(A)))


def pointwise_sup(F) -> DimElement:
    F = _as_family(F)
    return DimElement(F.algebra, tuple(chain_lub(c) for c in _atom_chains(F)))


def pointwise_inf(F) -> DimElement:
    F = _as_family(F)
    return DimElement(F.algebra, tuple(chain_glb(c) for c in _atom_chains(F)))


# -- certification helpers --------------------------------------------------------------


def _dominates(v: ExtValue, chain: ChainSet) -> bool:
    # v >= every member of chain
    if isinstance(v, Aleph):
        return all(l <= v.level for l in chain.alephs)
    if chain.alephs or chain.finite_unbounded:
        return False
    sup = chain.finite_sup()
    return sup is None or sup <= v.q


def _dominated(v: ExtValue, chain: ChainSet) -> bool:
    # v <= every member of chain
    if isinstance(v, Aleph):
        return not chain.has_finite_part and all(v.level <= l for l in chain.alephs)
    inf = chain.finite_inf()
    return inf is None or v.q <= inf


def is_upper_bound(h: DimElement, F) -> bool:
    F = _as_family(F)
    if isinstance(F, Explicit):
        return all(d_leq(m, h) for m in F.members)
    check_same(h.algebra, F.algebra)
    return all(_dominates(v, c) for v, c in zip(h.values, F.chains))


def is_lower_bound(h: DimElement, F) -> bool:
    F = _as_family(F)
    if isinstance(F, Explicit):
        return all(d_leq(h, m) for m in F.members)
    check_same(h.algebra, F.algebra)
    return all(_dominated(v, c) for v, c in zip(h.values, F.chains))


def is_least_upper_bound(h: DimElement, F, grid: Iterable[DimElement]) -> bool:
    """Upper bound of ``F`` lying below every upper bound found in ``grid``."""
    if not is_upper_bound(h, F):
        return False
    return all(d_leq(h, g) for g in grid if is_upper_bound(g, F))


def is_greatest_lower_bound(h: DimElement, F, grid: Iterable[DimElement]) -> bool:
    if not is_lower_bound(h, F):
        return False
    return all(d_leq(g, h) for g in grid if is_lower_bound(g, F))
