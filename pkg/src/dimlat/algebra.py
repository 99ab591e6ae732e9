"""Dimension data of a von Neumann algebra with a finite atomic center.

Each central atom is a factor summand, tagged with its type and, for the
properly infinite types, the homogeneity cardinal of its identity.  Central
projections are subsets of atoms, stored as bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Mapping, Optional, Union

from .chainset import NATURALS, ChainSet, Interval
from .extval import Aleph, ExtValue, Fin

if TYPE_CHECKING:
    from .dimfun import DimElement


class AlgebraMismatch(ValueError):
    pass


# -- atom types -------------------------------------------------------------


@dataclass(frozen=True)
class IFin:
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"I_fin needs a positive integer, got {self.n!r}")

    def __str__(self) -> str:
        return f"I_fin({self.n})"


@dataclass(frozen=True)
class II1:
    def __str__(self) -> str:
        return "II_1"


@dataclass(frozen=True)
class _ProperlyInfinite:
    kappa: int

    def __post_init__(self) -> None:
        Aleph(self.kappa)


@dataclass(frozen=True)
class IInf(_ProperlyInfinite):
    def __str__(self) -> str:
        return f"I_inf(aleph {self.kappa})"


@dataclass(frozen=True)
class IIInf(_ProperlyInfinite):
    def __str__(self) -> str:
        return f"II_inf(aleph {self.kappa})"


@dataclass(frozen=True)
class III(_ProperlyInfinite):
    def __str__(self) -> str:
        return f"III(aleph {self.kappa})"


AtomType = Union[IFin, II1, IInf, IIInf, III]


def is_finite_type(t: AtomType) -> bool:
    return isinstance(t, (IFin, II1))


def is_sigma_finite(t: AtomType) -> bool:
    # finite factors carry a faithful trace state
    return is_finite_type(t) or t.kappa == 0


def unit_value(t: AtomType) -> ExtValue:
    """Dimension of the identity on one atom, under the fixed normalisation."""
    if is_finite_type(t):
        return Fin(1)
    return Aleph(t.kappa)


def projection_domain(t: AtomType) -> ChainSet:
    """Every value a projection class can take on an atom of type ``t``."""
    if isinstance(t, IFin):
        return ChainSet(points=frozenset(Fraction(k, t.n) for k in range(t.n + 1)))
    if isinstance(t, II1):
        return ChainSet.interval(0, 1)
    alephs = frozenset(range(t.kappa + 1))
    if isinstance(t, IInf):
        return ChainSet(progressions=(NATURALS,), alephs=alephs)
    if isinstance(t, IIInf):
        return ChainSet(intervals=(Interval(Fraction(0), None),), alephs=alephs)
    return ChainSet(points=frozenset({Fraction(0)}), alephs=alephs)


def cone_domain(t: AtomType) -> ChainSet:
    """Every value a positive-cone class can take on an atom of type ``t``."""
    if isinstance(t, III):
        return projection_domain(t)
    alephs = frozenset() if is_finite_type(t) else frozenset(range(t.kappa + 1))
    return ChainSet(intervals=(Interval(Fraction(0), None),), alephs=alephs)


def value_admissible(t: AtomType, v: ExtValue, projection: bool = True) -> Optional[str]:
    """``None`` if ``v`` is admissible on ``t``, else a diagnostic message."""
    if isinstance(v, Aleph):
        if is_finite_type(t):
            return f"aleph value not admissible on {t} atom"
        if v.level > t.kappa:
            return f"aleph {v.level} exceeds the homogeneity cardinal of {t} atom"
        return None
    q = v.q
    if isinstance(t, III) and q != 0:
        return f"nonzero finite value {v} not admissible on {t} atom"
    if not projection:
        return None
    if is_finite_type(t) and q > 1:
        return f"value {v} exceeds the unit of {t} atom"
    if isinstance(t, IFin) and (q * t.n).denominator != 1:
        return f"value {v} is not a multiple of 1/{t.n} on {t} atom"
    if isinstance(t, IInf) and q.denominator != 1:
        return f"value {v} is not an integer on {t} atom"
    return None


# -- algebra descriptor -------------------------------------------------------


@dataclass(frozen=True)
class AlgebraDesc:
    atoms: tuple[tuple[str, AtomType], ...]
    name: str = field(default="M", compare=False)
    # (base algebra, index) when produced by ``amplify``
    origin: Optional[tuple["AlgebraDesc", ExtValue]] = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        atoms = tuple((str(a), t) for a, t in self.atoms)
        if not atoms:
            raise ValueError("an algebra needs at least one atom")
        ids = [a for a, _ in atoms]
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate atom ids in {ids}")
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(ids)})

    @classmethod
    def of(cls, *types: AtomType, name: str = "M") -> AlgebraDesc:
        """Algebra with atoms named ``a1, a2, ...``."""
        return cls(tuple((f"a{i + 1}", t) for i, t in enumerate(types)), name=name)

    def __len__(self) -> int:
        return len(self.atoms)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(a for a, _ in self.atoms)

    @property
    def types(self) -> tuple[AtomType, ...]:
        return tuple(t for _, t in self.atoms)

    def index(self, atom: str) -> int:
        try:
            return self._index[atom]
        except KeyError:
            raise KeyError(f"algebra {self.name} has no atom {atom!r}") from None

    def type_of(self, atom: str) -> AtomType:
        return self.atoms[self.index(atom)][1]

    @property
    def kappa_M(self) -> ExtValue:
        levels = [t.kappa for t in self.types if not is_finite_type(t)]
        return Aleph(max(levels)) if levels else Aleph(0)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.atoms)) - 1

    def unit(self) -> "DimElement":
        from .dimfun import DimElement

        return DimElement(self, tuple(unit_value(t) for t in self.types))

    def __str__(self) -> str:
        body = " ".join(f"atom {a} : {t};" for a, t in self.atoms)
        return f"algebra {self.name} {{ {body} }}"


def unit(A: AlgebraDesc) -> "DimElement":
    return A.unit()


def check_same(a: AlgebraDesc, b: AlgebraDesc) -> None:
    if a != b:
        raise AlgebraMismatch(f"algebra mismatch: {a.name} vs {b.name}")


# -- central projections --------------------------------------------------------


@dataclass(frozen=True)
class CentralProjection:
    algebra: AlgebraDesc
    mask: int

    def __post_init__(self) -> None:
        if self.mask & ~self.algebra.full_mask:
            raise ValueError("mask has bits outside the algebra's atoms")

    @classmethod
    def of(cls, algebra: AlgebraDesc, atoms: Iterable[str]) -> CentralProjection:
        mask = 0
        for a in atoms:
            mask |= 1 << algebra.index(a)
        return cls(algebra, mask)

    @property
    def atoms(self) -> frozenset[str]:
        return frozenset(a for i, a in enumerate(self.algebra.ids) if self.mask >> i & 1)

    def __contains__(self, atom: str) -> bool:
        return bool(self.mask >> self.algebra.index(atom) & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def _other(self, other: CentralProjection) -> int:
        check_same(self.algebra, other.algebra)
        return other.mask

    def __and__(self, other: CentralProjection) -> CentralProjection:
        return CentralProjection(self.algebra, self.mask & self._other(other))

    def __or__(self, other: CentralProjection) -> CentralProjection:
        return CentralProjection(self.algebra, self.mask | self._other(other))

    def __sub__(self, other: CentralProjection) -> CentralProjection:
        return CentralProjection(self.algebra, self.mask & ~self._other(other))

    def __invert__(self) -> CentralProjection:
        return CentralProjection(self.algebra, self.algebra.full_mask & ~self.mask)

    def __le__(self, other: CentralProjection) -> bool:
        return self.mask & ~self._other(other) == 0

    def __str__(self) -> str:
        return "{" + ", ".join(a for a in self.algebra.ids if a in self) + "}"


def cp_meet(a: CentralProjection, b: CentralProjection) -> CentralProjection:
    return a & b


def cp_join(a: CentralProjection, b: CentralProjection) -> CentralProjection:
    return a | b


def cp_complement(a: CentralProjection) -> CentralProjection:
    return ~a


def cp_diff(a: CentralProjection, b: CentralProjection) -> CentralProjection:
    return a - b


@dataclass(frozen=True)
class CentralPositive:
    """A positive central element: one nonnegative rational per atom."""

    algebra: AlgebraDesc
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != len(self.algebra):
            raise ValueError("central element must be total on the atoms")
        if any(v < 0 for v in vals):
            raise ValueError("central element must be positive")
        object.__setattr__(self, "values", vals)

    @classmethod
    def of(cls, algebra: AlgebraDesc, mapping: Mapping[str, object]) -> CentralPositive:
        missing = set(algebra.ids) - set(mapping)
        if missing:
            raise ValueError(f"missing atoms {sorted(missing)}")
        return cls(algebra, tuple(Fraction(mapping[a]) for a in algebra.ids))

    @classmethod
    def constant(cls, algebra: AlgebraDesc, c) -> CentralPositive:
        return cls(algebra, (Fraction(c),) * len(algebra))

    def __getitem__(self, atom: str) -> Fraction:
        return self.values[self.algebra.index(atom)]


# -- amplification ---------------------------------------------------------------


def _amplify_type(t: AtomType, index: ExtValue) -> AtomType:
    if isinstance(index, Fin):
        m = int(index.q)
        return IFin(t.n * m) if isinstance(t, IFin) else t
    i = index.level
    if isinstance(t, IFin):
        return IInf(i)
    if isinstance(t, II1):
        return IIInf(i)
    return type(t)(max(t.kappa, i))


def _check_index(index: ExtValue) -> None:
    if isinstance(index, Fin) and (index.q.denominator != 1 or index.q < 1):
        raise ValueError(f"amplification index must be a positive integer or an aleph, got {index}")


def amplify(A: AlgebraDesc, index: ExtValue) -> AlgebraDesc:
    """Dimension data of ``B(l^2_I) (x) A`` for an index set of size ``index``."""
    _check_index(index)
    if index == Fin(1):
        return A
    atoms = tuple((a, _amplify_type(t, index)) for a, t in A.atoms)
    return AlgebraDesc(atoms, name=f"{A.name}^{index}".replace(" ", ""), origin=(A, index))


def _is_amplification(A: AlgebraDesc, B: AlgebraDesc, index: ExtValue) -> bool:
    if index == Fin(1):
        return A == B
    return B.origin is not None and B.origin[0] == A and B.origin[1] == index and amplify(A, index) == B


def embed_value(t: AtomType, v: ExtValue, index: ExtValue) -> ExtValue:
    """Translate one atom's value from ``A`` into ``amplify(A, index)``."""
    if isinstance(v, Aleph) or not is_finite_type(t):
        return v
    if isinstance(index, Fin):
        return Fin(v.q / index.q)
    if isinstance(t, IFin):
        # abelian projections of the amplified I_inf factor count minimal ranks
        return Fin(v.q * t.n)
    return Fin(v.q)


def unembed_value(t: AtomType, v: ExtValue, index: ExtValue) -> ExtValue:
    """Inverse of :func:`embed_value`: value in units where ``unit(A) = 1``."""
    if isinstance(v, Aleph) or not is_finite_type(t):
        return v
    if isinstance(index, Fin):
        return Fin(v.q * index.q)
    if isinstance(t, IFin):
        return Fin(v.q / t.n)
    return Fin(v.q)


def embed_class(e: "DimElement", B: AlgebraDesc, index: Optional[ExtValue] = None) -> "DimElement":
    """Carry a projection class of ``A`` into the amplification ``B``."""
    from .dimfun import DimElement, is_projection_class

    A = e.algebra
    if index is None:
        if B == A and B.origin is None:
            index = Fin(1)
        elif B.origin is None:
            raise AlgebraMismatch(f"{B.name} is not an amplification of {A.name}")
        else:
            index = B.origin[1]
    if not _is_amplification(A, B, index):
        raise AlgebraMismatch(f"{B.name} is not an amplification of {A.name} by {index}")
    if not is_projection_class(e):
        raise ValueError("embed_class needs a projection class")
    vals = tuple(embed_value(t, v, index) for t, v in zip(A.types, e.values))
    return DimElement(B, vals)
