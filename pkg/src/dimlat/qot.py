"""Closures and separation properties of the quotient operator topology.

On a finite atom the trace identifies the class space with a subspace of the
reals, so points are closed and closures are Euclidean.  On a properly
infinite atom closures only see the trace: a set's closure is everything
whose trace is at most the supremum of the traces in the set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .algebra import AlgebraDesc, check_same, is_finite_type, projection_domain
from .chainset import ChainSet
from .dimfun import DimElement, is_projection_class
from .extval import Aleph, Fin


class UnsupportedFragment(NotImplementedError):
    """The closure is not determined by the implemented formulas."""


@dataclass(frozen=True)
class ExplicitSet:
    members: tuple[DimElement, ...]

    def __init__(self, members: Iterable[DimElement]) -> None:
        members = tuple(members)
        if not members:
            raise ValueError("explicit set must be nonempty")
        for m in members[1:]:
            check_same(members[0].algebra, m.algebra)
        object.__setattr__(self, "members", members)

    @property
    def algebra(self) -> AlgebraDesc:
        return self.members[0].algebra

    def contains(self, q: DimElement) -> bool:
        return q in self.members

    def __str__(self) -> str:
        return "[" + ", ".join(str(m) for m in self.members) + "]"


@dataclass(frozen=True)
class ProductSet:
    algebra: AlgebraDesc
    chains: tuple[ChainSet, ...]

    @classmethod
    def of(cls, algebra: AlgebraDesc, mapping: Mapping[str, ChainSet]) -> ProductSet:
        return cls(algebra, tuple(mapping[a] for a in algebra.ids))

    def contains(self, q: DimElement) -> bool:
        check_same(self.algebra, q.algebra)
        return all(c.contains(v) for c, v in zip(self.chains, q.values))

    def __str__(self) -> str:
        return "{ " + ", ".join(f"{a}: {c}" for a, c in zip(self.algebra.ids, self.chains)) + " }"


ClassSetDescriptor = Union[ExplicitSet, ProductSet]


def _require_projection(p: DimElement) -> None:
    if not is_projection_class(p):
        raise ValueError(f"{p} is not a projection class")


def closure_singleton(p: DimElement) -> ProductSet:
    _require_projection(p)
    chains = []
    for t, v in zip(p.algebra.types, p.values):
        if is_finite_type(t):
            chains.append(ChainSet.of_values([v]))
        else:
            # everything with trace <= the trace of p; an aleph collapses to +inf
            dom = projection_domain(t)
            chains.append(dom if isinstance(v, Aleph) else dom.restrict_le(v))
    return ProductSet(p.algebra, tuple(chains))


def _atom_closure(t, chain: ChainSet) -> ChainSet:
    if is_finite_type(t):
        return chain.topological_closure()
    dom = projection_domain(t)
    if chain.alephs or chain.finite_unbounded:
        return dom
    sup = chain.finite_sup()
    return dom.restrict_le(Fin(sup if sup is not None else 0))


def _as_chains(E: ClassSetDescriptor) -> tuple[ChainSet, ...]:
    if isinstance(E, ProductSet):
        return E.chains
    A = E.algebra
    return tuple(ChainSet.of_values(m.values[i] for m in E.members) for i in range(len(A)))


def closure_factor_set(E: ClassSetDescriptor) -> ProductSet:
    """Closure of any class set over a single-atom algebra."""
    A = E.algebra
    if len(A) != 1:
        raise UnsupportedFragment("closure_factor_set needs a single-atom algebra")
    _validate(E)
    return ProductSet(A, (_atom_closure(A.types[0], _as_chains(E)[0]),))


def _validate(E: ClassSetDescriptor) -> None:
    if isinstance(E, ExplicitSet):
        for m in E.members:
            _require_projection(m)
        return
    for (atom, t), chain in zip(E.algebra.atoms, E.chains):
        if chain.is_empty:
            raise ValueError(f"value set for atom {atom} is empty")
        if not chain.issubset(projection_domain(t)):
            raise ValueError(f"value set {chain} for atom {atom} leaves the admissible values of {t}")


def _single_point(E: ClassSetDescriptor):
    if isinstance(E, ExplicitSet):
        return E.members[0] if len(set(E.members)) == 1 else None
    vals = []
    for c in E.chains:
        if not c.is_finite_set():
            return None
        els = c.elements()
        if len(els) != 1:
            return None
        vals.append(els[0])
    return DimElement(E.algebra, tuple(vals))


def closure(E: ClassSetDescriptor) -> ClassSetDescriptor:
    """Closure of ``E`` wherever the implemented formulas determine it."""
    A = E.algebra
    point = _single_point(E)
    if point is not None:
        return closure_singleton(point)
    if len(A) == 1:
        return closure_factor_set(E)
    if all(is_finite_type(t) for t in A.types):
        _validate(E)
        if isinstance(E, ExplicitSet):
            # T1: finite sets are closed
            return E
        return ProductSet(A, tuple(c.topological_closure() for c in E.chains))
    raise UnsupportedFragment(
        "closure of a non-singleton set over a multi-atom algebra with a properly infinite atom"
    )


def in_closure(q: DimElement, E: ClassSetDescriptor) -> bool:
    _require_projection(q)
    check_same(q.algebra, E.algebra)
    return closure(E).contains(q)


# -- separation ---------------------------------------------------------------------------


def is_T1(A: AlgebraDesc) -> bool:
    return all(is_finite_type(t) for t in A.types)


def is_T0(A: AlgebraDesc) -> bool:
    return all(is_finite_type(t) or t.kappa == 0 for t in A.types)


def quotient_maps_normal(A: AlgebraDesc) -> bool:
    return is_T0(A)
