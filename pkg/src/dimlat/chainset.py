"""Subsets of the value chain at one atom.

A :class:`ChainSet` is a finite union of rational intervals (possibly
unbounded above), isolated rational points, infinite arithmetic progressions
such as the naturals, and a finite set of aleph levels.  Instances are kept
in a canonical form so that structural equality is set equality for the
shapes produced by this package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Optional

from .extval import Aleph, ExtValue, Fin, render_rational


class EmptyChainSet(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Interval:
    """``lo..hi`` with endpoint flags; ``hi=None`` means unbounded above."""

    lo: Fraction
    hi: Optional[Fraction]
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        if self.hi is not None:
            object.__setattr__(self, "hi", Fraction(self.hi))
        else:
            object.__setattr__(self, "hi_closed", False)
        if self.lo < 0:
            raise ValueError("interval endpoints must be nonnegative")

    @property
    def is_empty(self) -> bool:
        if self.hi is None:
            return False
        if self.lo > self.hi:
            return True
        return self.lo == self.hi and not (self.lo_closed and self.hi_closed)

    @property
    def is_point(self) -> bool:
        return self.hi is not None and self.lo == self.hi and self.lo_closed and self.hi_closed

    def contains(self, q: Fraction) -> bool:
        if q < self.lo or (q == self.lo and not self.lo_closed):
            return False
        if self.hi is None:
            return True
        return q < self.hi or (q == self.hi and self.hi_closed)

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        if self.hi is None:
            return f"{left}{render_rational(self.lo)},inf)"
        right = "]" if self.hi_closed else ")"
        return f"{left}{render_rational(self.lo)},{render_rational(self.hi)}{right}"


@dataclass(frozen=True, order=True)
class Progression:
    """The infinite set ``{start + k*step : k = 0, 1, 2, ...}``."""

    start: Fraction
    step: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "start", Fraction(self.start))
        object.__setattr__(self, "step", Fraction(self.step))
        if self.start < 0 or self.step <= 0:
            raise ValueError("progression needs start >= 0 and step > 0")

    def contains(self, q: Fraction) -> bool:
        if q < self.start:
            return False
        return ((q - self.start) / self.step).denominator == 1

    def terms_below(self, bound: Fraction, inclusive: bool = True) -> Iterator[Fraction]:
        q = self.start
        while q < bound or (inclusive and q == bound):
            yield q
            q += self.step

    def is_subset_of(self, other: Progression) -> bool:
        return other.contains(self.start) and (self.step / other.step).denominator == 1

    def __str__(self) -> str:
        if self.start == 0 and self.step == 1:
            return "naturals"
        return f"progression({render_rational(self.start)},{render_rational(self.step)})"


NATURALS = Progression(Fraction(0), Fraction(1))


def _merge_intervals(intervals: list[Interval]) -> list[Interval]:
    out: list[Interval] = []
    for iv in sorted(intervals, key=lambda i: (i.lo, not i.lo_closed)):
        if not out:
            out.append(iv)
            continue
        last = out[-1]
        if last.hi is None:
            continue
        touches = iv.lo < last.hi or (iv.lo == last.hi and (last.hi_closed or iv.lo_closed))
        if not touches:
            out.append(iv)
            continue
        if iv.hi is None:
            hi, hi_closed = None, False
        elif iv.hi > last.hi:
            hi, hi_closed = iv.hi, iv.hi_closed
        elif iv.hi == last.hi:
            hi, hi_closed = last.hi, last.hi_closed or iv.hi_closed
        else:
            hi, hi_closed = last.hi, last.hi_closed
        lo_closed = last.lo_closed or (iv.lo == last.lo and iv.lo_closed)
        out[-1] = Interval(last.lo, hi, lo_closed, hi_closed)
    return out


def _absorb_points(intervals: list[Interval], points: set) -> list[Interval]:
    # close open endpoints that are listed as points, re-merging until stable
    while True:
        intervals = _merge_intervals(intervals)
        changed = False
        for idx, iv in enumerate(intervals):
            if not iv.lo_closed and iv.lo in points:
                iv = Interval(iv.lo, iv.hi, True, iv.hi_closed)
                changed = True
            if iv.hi is not None and not iv.hi_closed and iv.hi in points:
                iv = Interval(iv.lo, iv.hi, iv.lo_closed, True)
                changed = True
            intervals[idx] = iv
        if not changed:
            return intervals


def _lcm_frac(a: Fraction, b: Fraction) -> Fraction:
    # lcm of positive rationals in lowest terms
    num = a.numerator * b.numerator // gcd(a.numerator, b.numerator)
    return Fraction(num, gcd(a.denominator, b.denominator))


@dataclass(frozen=True)
class ChainSet:
    intervals: tuple[Interval, ...] = ()
    points: frozenset = frozenset()
    progressions: tuple[Progression, ...] = ()
    alephs: frozenset = frozenset()
    _canonical: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self._canonical:
            return
        intervals = [iv for iv in self.intervals if not iv.is_empty]
        points = {Fraction(p) for p in self.points}
        for p in points:
            if p < 0:
                raise ValueError("points must be nonnegative")
        points.update(iv.lo for iv in intervals if iv.is_point)
        intervals = [iv for iv in intervals if not iv.is_point]

        progs = sorted(set(self.progressions))
        while True:
            intervals = _absorb_points(intervals, points)
            ray = intervals[-1] if intervals and intervals[-1].hi is None else None
            if ray is None or not progs:
                break
            # a tail inside the ray is redundant; keep only the finite prefix
            for pr in progs:
                points.update(q for q in pr.terms_below(ray.lo) if not ray.contains(q))
            progs = []
        progs = [pr for pr in progs if not any(o != pr and pr.is_subset_of(o) for o in progs)]

        points = {
            p for p in points
            if not any(iv.contains(p) for iv in intervals) and not any(pr.contains(p) for pr in progs)
        }
        alephs = frozenset(self.alephs)
        for lvl in alephs:
            Aleph(lvl)  # validates the level
        object.__setattr__(self, "intervals", tuple(intervals))
        object.__setattr__(self, "points", frozenset(points))
        object.__setattr__(self, "progressions", tuple(progs))
        object.__setattr__(self, "alephs", alephs)
        object.__setattr__(self, "_canonical", True)

    # -- constructors -------------------------------------------------------

    @classmethod
    def of_values(cls, values: Iterable[ExtValue]) -> ChainSet:
        pts, als = set(), set()
        for v in values:
            if isinstance(v, Fin):
                pts.add(v.q)
            else:
                als.add(v.level)
        return cls(points=frozenset(pts), alephs=frozenset(als))

    @classmethod
    def interval(cls, lo, hi, lo_closed=True, hi_closed=True) -> ChainSet:
        return cls(intervals=(Interval(Fraction(lo), None if hi is None else Fraction(hi), lo_closed, hi_closed),))

    # -- queries -------------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not (self.intervals or self.points or self.progressions or self.alephs)

    @property
    def has_finite_part(self) -> bool:
        return bool(self.intervals or self.points or self.progressions)

    @property
    def finite_unbounded(self) -> bool:
        return bool(self.progressions) or any(iv.hi is None for iv in self.intervals)

    def contains(self, v: ExtValue) -> bool:
        if isinstance(v, Aleph):
            return v.level in self.alephs
        q = v.q
        return (
            q in self.points
            or any(iv.contains(q) for iv in self.intervals)
            or any(pr.contains(q) for pr in self.progressions)
        )

    __contains__ = contains

    def finite_sup(self) -> Optional[Fraction]:
        """Supremum of the rational part; ``None`` if empty or unbounded."""
        if not self.has_finite_part or self.finite_unbounded:
            return None
        cands = [iv.hi for iv in self.intervals] + list(self.points)
        return max(cands)

    def finite_inf(self) -> Optional[Fraction]:
        if not self.has_finite_part:
            return None
        cands = [iv.lo for iv in self.intervals] + list(self.points) + [pr.start for pr in self.progressions]
        return min(cands)

    def is_finite_set(self) -> bool:
        return not self.intervals and not self.progressions

    def elements(self) -> list[ExtValue]:
        """Members in increasing order; only for finite sets."""
        if not self.is_finite_set():
            raise ValueError("set is infinite")
        return [Fin(p) for p in sorted(self.points)] + [Aleph(l) for l in sorted(self.alephs)]

    # -- set algebra -----------------------------------------------------------

    def union(self, other: ChainSet) -> ChainSet:
        return ChainSet(
            self.intervals + other.intervals,
            self.points | other.points,
            self.progressions + other.progressions,
            self.alephs | other.alephs,
        )

    __or__ = union

    def restrict_le(self, bound: ExtValue) -> ChainSet:
        """Members ``<= bound``."""
        if isinstance(bound, Aleph):
            return ChainSet(self.intervals, self.points, self.progressions,
                            frozenset(l for l in self.alephs if l <= bound.level))
        b = bound.q
        ivs = []
        for iv in self.intervals:
            if iv.lo > b:
                continue
            if iv.hi is None or iv.hi > b:
                ivs.append(Interval(iv.lo, b, iv.lo_closed, True))
            else:
                ivs.append(iv)
        pts = {p for p in self.points if p <= b}
        for pr in self.progressions:
            pts.update(pr.terms_below(b))
        return ChainSet(tuple(ivs), frozenset(pts))

    def topological_closure(self) -> ChainSet:
        """Order-topology closure of the rational part; alephs are kept as is.

        Progressions are discrete and unbounded, so they are already closed.
        """
        ivs = tuple(Interval(iv.lo, iv.hi, True, iv.hi is not None) for iv in self.intervals)
        return ChainSet(ivs, self.points, self.progressions, self.alephs)

    def issubset(self, other: ChainSet) -> bool:
        if not self.alephs <= other.alephs:
            return False
        if not all(other.contains(Fin(p)) for p in self.points):
            return False
        for iv in self.intervals:
            if not _interval_covered(iv, other):
                return False
        for pr in self.progressions:
            if not _progression_covered(pr, other):
                return False
        return True

    __le__ = issubset

    def __str__(self) -> str:
        parts = [(iv.lo, str(iv)) for iv in self.intervals]
        parts += [(p, render_rational(p)) for p in self.points]
        parts += [(pr.start, str(pr)) for pr in self.progressions]
        parts.sort(key=lambda t: t[0])
        items = [s for _, s in parts] + [f"aleph {l}" for l in sorted(self.alephs)]
        return "{" + ", ".join(items) + "}"


def _interval_covered(iv: Interval, other: ChainSet) -> bool:
    # A gap of positive length cannot be filled by countably many points, so
    # walk the merged intervals of ``other`` and allow only single-point gaps
    # that ``other`` contains through its points or progressions.
    cur, cur_needed = iv.lo, iv.lo_closed
    while True:
        ov = next(
            (o for o in other.intervals if o.lo <= cur and (o.hi is None or o.hi > cur)),
            None,
        )
        if ov is None:
            return False
        if cur_needed and not other.contains(Fin(cur)):
            return False
        if ov.hi is None:
            return True
        if iv.hi is not None:
            if iv.hi < ov.hi or (iv.hi == ov.hi and (ov.hi_closed or not iv.hi_closed)):
                return True
            if iv.hi == ov.hi:
                return other.contains(Fin(iv.hi))
        cur, cur_needed = ov.hi, not ov.hi_closed


def _progression_covered(pr: Progression, other: ChainSet) -> bool:
    ray = other.intervals[-1] if other.intervals and other.intervals[-1].hi is None else None
    period = pr.step
    for o in other.progressions:
        period = _lcm_frac(period, o.step)
    bounds = [pr.start] + [o.start for o in other.progressions] + list(other.points)
    for iv in other.intervals:
        bounds.append(iv.lo if iv.hi is None else iv.hi)
    limit = max(bounds) + period
    for q in pr.terms_below(limit):
        if not other.contains(Fin(q)):
            return False
    if ray is not None and ray.lo <= limit:
        return True
    # beyond ``limit`` membership through progressions is periodic and was checked
    return bool(other.progressions)


def chain_lub(s: ChainSet) -> ExtValue:
    """Least upper bound in the chain; the empty set has lub ``Fin(0)``."""
    if s.alephs:
        return Aleph(max(s.alephs))
    if not s.has_finite_part:
        return Fin(0)
    if s.finite_unbounded:
        return Aleph(0)
    return Fin(s.finite_sup())


def chain_glb(s: ChainSet) -> ExtValue:
    if s.is_empty:
        raise EmptyChainSet("glb of an empty set is undefined here")
    if s.has_finite_part:
        return Fin(s.finite_inf())
    return Aleph(min(s.alephs))

