"""Values of a dimension function at a single central atom.

The chain is ``[0, oo) ∩ Q`` followed by the alephs ``aleph 0 < aleph 1 < ...``,
with real numbers folded into cardinal arithmetic: a finite value added to an
aleph is absorbed, and the sum of two alephs is the larger one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

DEFAULT_MAX_ALEPH = 8

_max_aleph = DEFAULT_MAX_ALEPH


def max_aleph() -> int:
    return _max_aleph


def set_max_aleph(level: int) -> None:
    """Set the largest representable aleph index (process-wide)."""
    global _max_aleph
    if not isinstance(level, int) or level < 0:
        raise ValueError(f"max aleph must be a nonnegative integer, got {level!r}")
    _max_aleph = level


Rational = Union[int, Fraction]


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class ExtValue:
    """Common base of :class:`Fin` and :class:`Aleph`; totally ordered."""

    __slots__ = ()

    def _key(self) -> tuple:
        raise NotImplementedError

    def __lt__(self, other):
        if not isinstance(other, ExtValue):
            return NotImplemented
        return self._key() < other._key()

    def __le__(self, other):
        if not isinstance(other, ExtValue):
            return NotImplemented
        return self._key() <= other._key()

    def __gt__(self, other):
        if not isinstance(other, ExtValue):
            return NotImplemented
        return self._key() > other._key()

    def __ge__(self, other):
        if not isinstance(other, ExtValue):
            return NotImplemented
        return self._key() >= other._key()

    def __add__(self, other):
        if not isinstance(other, ExtValue):
            return NotImplemented
        return ev_add(self, other)

    @property
    def is_finite(self) -> bool:
        return isinstance(self, Fin)


@dataclass(frozen=True, slots=True, eq=True)
class Fin(ExtValue):
    q: Fraction

    def __init__(self, q: Rational | str = 0) -> None:
        q = Fraction(q)
        if q < 0:
            raise ValueError(f"finite value must be nonnegative, got {q}")
        object.__setattr__(self, "q", q)

    def _key(self) -> tuple:
        return (0, self.q)

    def __str__(self) -> str:
        return render_rational(self.q)

    def __repr__(self) -> str:
        return f"Fin({self.q})"


@dataclass(frozen=True, slots=True, eq=True)
class Aleph(ExtValue):
    level: int

    def __post_init__(self) -> None:
        if not isinstance(self.level, int) or isinstance(self.level, bool):
            raise TypeError(f"aleph level must be an int, got {self.level!r}")
        if self.level < 0 or self.level > _max_aleph:
            raise ValueError(f"aleph level {self.level} outside 0..{_max_aleph}")

    def _key(self) -> tuple:
        return (1, self.level)

    def __str__(self) -> str:
        return f"aleph {self.level}"

    def __repr__(self) -> str:
        return f"Aleph({self.level})"


ZERO = Fin(0)
ONE = Fin(1)


def render_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def ev_compare(a: ExtValue, b: ExtValue) -> Ordering:
    ka, kb = a._key(), b._key()
    if ka < kb:
        return Ordering.LT
    if ka > kb:
        return Ordering.GT
    return Ordering.EQ


def ev_add(a: ExtValue, b: ExtValue) -> ExtValue:
    if isinstance(a, Fin):
        if isinstance(b, Fin):
            return Fin(a.q + b.q)
        return b
    if isinstance(b, Fin):
        return a
    return a if a.level >= b.level else b


def ev_scale(lam: Rational, a: ExtValue) -> ExtValue:
    """Multiply by a strictly positive rational; alephs are fixed points."""
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError(f"scale factor must be positive, got {lam} (use ev_zero_scale for 0)")
    if isinstance(a, Fin):
        return Fin(lam * a.q)
    return a


def ev_zero_scale(a: ExtValue) -> ExtValue:
    return ZERO


def ev_max(a: ExtValue, b: ExtValue) -> ExtValue:
    return b if a._key() < b._key() else a


def ev_min(a: ExtValue, b: ExtValue) -> ExtValue:
    return a if a._key() <= b._key() else b


def ev_sub(b: ExtValue, a: ExtValue) -> ExtValue:
    """A canonical ``c`` with ``a + c == b``; requires ``a <= b``.

    Finite differences are exact. When ``b`` is an aleph the answer is ``b``
    itself, which covers the equal-aleph case since an infinite cardinal
    absorbs itself.
    """
    if not a <= b:
        raise ValueError(f"{a} is not below {b}")
    if isinstance(b, Fin):
        return Fin(b.q - a.q)
    return b
