"""Acceptance criteria 1-8, runnable from the library and from ``dimlat selftest``.

Each check compares the library against something computed another way:
per-atom chain bounds, rank tuples, or direct evaluation of the defining
inequalities over a finite grid.  Every check is exact.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

from . import extval
from .algebra import (
    II1,
    III,
    IFin,
    IIInf,
    IInf,
    AlgebraDesc,
    AtomType,
    amplify,
    is_finite_type,
    projection_domain,
)
from .chainset import ChainSet, Interval
from .complattice import (
    Explicit,
    family_inf,
    family_sup,
    is_greatest_lower_bound,
    is_least_upper_bound,
    pointwise_inf,
    pointwise_sup,
)
from .dimfun import (
    DimElement,
    complement_in,
    d_add,
    d_leq,
    is_projection_class,
    pair_join,
    pair_meet,
    zero,
)
from .extval import Aleph, ExtValue, Fin, ev_add, ev_scale
from .fdoracle import (
    NotRealizable,
    enumerate_classes,
    oracle_check,
    rank_add,
    rank_join,
    rank_meet,
    rep_common_sub,
    rep_common_super,
    shape_algebra,
    to_dim_element,
)
from .qot import ExplicitSet, ProductSet, closure_singleton, in_closure, is_T0, is_T1, quotient_maps_normal

SEED = 20240611
RANDOM_CASES = 10_000


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number}. {self.name}: {self.detail} ({self.seconds:.1f}s)"


# -- random generators ---------------------------------------------------------------


def random_atom_type(rng: random.Random, max_level: int = 2) -> AtomType:
    kind = rng.randrange(5)
    if kind == 0:
        return IFin(rng.randint(1, 4))
    if kind == 1:
        return II1()
    return (IInf, IIInf, III)[kind - 2](rng.randint(0, max_level))


def random_algebra(rng: random.Random, max_atoms: int = 5) -> AlgebraDesc:
    return AlgebraDesc.of(*(random_atom_type(rng) for _ in range(rng.randint(1, max_atoms))))


def _random_fraction(rng: random.Random, top: int, max_den: int) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(0, top * den), den)


def random_value(rng: random.Random, t: AtomType, cone: bool = False) -> ExtValue:
    """A value admissible at an atom of type ``t`` (projection or cone class)."""
    if isinstance(t, IFin):
        if cone:
            return Fin(_random_fraction(rng, 3, 2 * t.n))
        return Fin(Fraction(rng.randint(0, t.n), t.n))
    if isinstance(t, II1):
        return Fin(_random_fraction(rng, 3 if cone else 1, 6))
    if rng.random() < 0.3:
        return Aleph(rng.randint(0, t.kappa))
    if isinstance(t, III) and not cone:
        return Fin(0)
    if isinstance(t, IInf) and not cone:
        return Fin(rng.randint(0, 4))
    return Fin(_random_fraction(rng, 4, 4))


def random_element(rng: random.Random, A: AlgebraDesc, cone: bool = False) -> DimElement:
    return DimElement(A, tuple(random_value(rng, t, cone) for t in A.types))


# -- helpers ---------------------------------------------------------------------------


def _families(grid: Sequence[DimElement], max_size: int) -> Iterator[tuple[DimElement, ...]]:
    for size in range(1, max_size + 1):
        yield from itertools.product(grid, repeat=size)


def _product_grid(A: AlgebraDesc, per_atom: Sequence[Sequence[ExtValue]]) -> list[DimElement]:
    return [DimElement(A, vals) for vals in itertools.product(*per_atom)]


LATTICE_GRID_VALUES = (Fin(0), Fin(Fraction(1, 2)), Fin(1), Fin(Fraction(3, 2)), Aleph(0), Aleph(1))


def lattice_grid_algebra() -> AlgebraDesc:
    return AlgebraDesc.of(IIInf(1), III(1), name="M")


def lattice_grids() -> tuple[list[DimElement], list[DimElement]]:
    """The admissible grid and the full formal grid of criteria 1 and 2."""
    A = lattice_grid_algebra()
    formal = _product_grid(A, [LATTICE_GRID_VALUES] * 2)
    admissible = [p for p in formal if is_projection_class(p)]
    return admissible, formal


def _first(failures: list[str]) -> str:
    return f"; first failure: {failures[0]}" if failures else ""


# -- criteria ----------------------------------------------------------------------------


def criterion_1() -> tuple[bool, str]:
    admissible, formal = lattice_grids()
    failures: list[str] = []
    counts = []
    for grid, validate in ((admissible, True), (formal, False)):
        n = 0
        for fam in _families(grid, 3):
            n += 1
            F = Explicit(fam)
            if family_sup(F, validate=validate) != pointwise_sup(F):
                failures.append(f"sup of {[str(m) for m in fam]}")
            if family_inf(F, validate=validate) != pointwise_inf(F):
                failures.append(f"inf of {[str(m) for m in fam]}")
        counts.append(n)
    rng = random.Random(SEED)
    for _ in range(RANDOM_CASES):
        A = random_algebra(rng)
        F = Explicit(random_element(rng, A) for _ in range(rng.randint(1, 4)))
        if family_sup(F) != pointwise_sup(F) or family_inf(F) != pointwise_inf(F):
            failures.append(f"random family {[str(m) for m in F.members]}")
    detail = (f"{counts[0]} admissible + {counts[1]} formal grid families, "
              f"{RANDOM_CASES} random families, {len(failures)} mismatches{_first(failures)}")
    return not failures, detail


def criterion_2() -> tuple[bool, str]:
    admissible, formal = lattice_grids()
    failures: list[str] = []
    n = 0
    for grid, validate in ((admissible, True), (formal, False)):
        for fam in _families(grid, 3):
            n += 1
            F = Explicit(fam)
            if not is_least_upper_bound(family_sup(F, validate=validate), F, grid):
                failures.append(f"sup of {[str(m) for m in fam]}")
            if not is_greatest_lower_bound(family_inf(F, validate=validate), F, grid):
                failures.append(f"inf of {[str(m) for m in fam]}")
    return not failures, f"{n} families certified against their grid, {len(failures)} failures{_first(failures)}"


def criterion_3() -> tuple[bool, str]:
    rng = random.Random(SEED + 3)
    failures: list[str] = []
    for _ in range(RANDOM_CASES):
        A = random_algebra(rng)
        a, b, c = (random_element(rng, A) for _ in range(3))
        meet, join = pair_meet, pair_join
        laws = {
            "meet idempotent": meet(a, a) == a,
            "join idempotent": join(a, a) == a,
            "meet commutative": meet(a, b) == meet(b, a),
            "join commutative": join(a, b) == join(b, a),
            "meet associative": meet(meet(a, b), c) == meet(a, meet(b, c)),
            "join associative": join(join(a, b), c) == join(a, join(b, c)),
            "absorption meet/join": meet(a, join(a, b)) == a,
            "absorption join/meet": join(a, meet(a, b)) == a,
            "meet is a lower bound": d_leq(meet(a, b), a) and d_leq(meet(a, b), b),
            "join is an upper bound": d_leq(a, join(a, b)) and d_leq(b, join(a, b)),
        }
        x, y, z = (random_element(rng, A, cone=True) for _ in range(3))
        laws.update({
            "add associative": d_add(d_add(x, y), z) == d_add(x, d_add(y, z)),
            "add commutative": d_add(x, y) == d_add(y, x),
            "zero is neutral": d_add(x, zero(A)) == x,
            "a <= a + c": d_leq(x, d_add(x, y)),
        })
        lo, hi = pair_meet(x, y), pair_join(x, y)
        laws["complement witnesses order"] = d_add(lo, complement_in(lo, hi)) == hi
        if d_leq(x, y):
            laws["a <= b gives a witness"] = d_add(x, complement_in(x, y)) == y
        for law, ok in laws.items():
            if not ok:
                failures.append(f"{law} at {a}, {b}, {c} / {x}, {y}, {z}")
    return not failures, f"{RANDOM_CASES} random triples, {len(failures)} law violations{_first(failures)}"


def criterion_4() -> tuple[bool, str]:
    rationals = sorted({Fraction(n, d) for n in range(25) for d in range(1, 13)})
    alephs = [Aleph(k) for k in range(4)]
    failures: list[str] = []
    checks = 0
    for r in rationals:
        for a in alephs:
            checks += 2
            if ev_add(Fin(r), a) != a or ev_add(a, Fin(r)) != a:
                failures.append(f"{r} + {a}")
            if r > 0 and ev_scale(r, a) != a:
                failures.append(f"{r} * {a}")
    for a, b in itertools.product(alephs, repeat=2):
        checks += 1
        if ev_add(a, b) != Aleph(max(a.level, b.level)):
            failures.append(f"{a} + {b}")
    return not failures, f"{checks} identities over {len(rationals)} rationals, {len(failures)} failures{_first(failures)}"


def criterion_5() -> tuple[bool, str]:
    failures: list[str] = []
    parts = []
    for shape in ((2,), (2, 3), (1, 2, 2)):
        ok, n, fails = oracle_check(shape)
        failures += fails
        A = shape_algebra(shape)
        classes = enumerate_classes(shape)
        image = {t: to_dim_element(t, shape, A) for t in classes}
        for s, t in itertools.product(classes, repeat=2):
            F = Explicit([image[s], image[t]])
            if family_sup(F) != image[rank_join(s, t)] or family_inf(F) != image[rank_meet(s, t)]:
                failures.append(f"family bounds of {s}, {t} in shape {shape}")
            try:
                total = rank_add(s, t, shape)
            except NotRealizable:
                continue
            if d_add(image[s], image[t]) != image[total]:
                failures.append(f"{s} + {t} in shape {shape}")
        parts.append(f"{shape}: {n}")
    return not failures, f"classes {', '.join(parts)}; {len(failures)} disagreements{_first(failures)}"


def criterion_6() -> tuple[bool, str]:
    failures: list[str] = []
    A = AlgebraDesc.of(IIInf(1), name="R")
    B = AlgebraDesc.of(II1(), name="F")
    unit_segment = ChainSet(intervals=(Interval(Fraction(0), Fraction(1), True, True),))
    infinite_grid = [Fin(0), Fin(Fraction(1, 4)), Fin(Fraction(1, 2)), Fin(1), Fin(Fraction(3, 2)),
                     Fin(2), Fin(5), Fin(Fraction(21, 2)), Aleph(0), Aleph(1)]
    finite_grid = [Fin(Fraction(k, 9)) for k in range(10)]
    p_half = DimElement(B, (Fin(Fraction(1, 2)),))
    cases = [
        ("finite projection in a type II_inf factor", DimElement(A, (Fin(1),)),
         ProductSet(A, (unit_segment,)), infinite_grid, lambda v: isinstance(v, Fin) and v.q <= 1),
        ("infinite projection in a type II_inf factor", DimElement(A, (Aleph(0),)),
         ProductSet(A, (projection_domain(IIInf(1)),)), infinite_grid, lambda v: True),
        ("projection in a type II_1 factor", p_half,
         ProductSet(B, (ChainSet.of_values([Fin(Fraction(1, 2))]),)), finite_grid + [Fin(Fraction(1, 2))],
         lambda v: v == Fin(Fraction(1, 2))),
    ]
    memberships = 0
    for label, p, expected, grid, member in cases:
        got = closure_singleton(p)
        if got != expected:
            failures.append(f"{label}: closure {got}, expected {expected}")
        for v in grid:
            q = DimElement(p.algebra, (v,))
            memberships += 1
            if in_closure(q, ExplicitSet([p])) != member(v):
                failures.append(f"{label}: membership of {v}")
    if not ProductSet(A, (projection_domain(IIInf(1)),)).contains(DimElement(A, (Aleph(1),))):
        failures.append("full class set misses aleph 1")
    return not failures, f"{len(cases)} closures, {memberships} memberships, {len(failures)} failures{_first(failures)}"


SEPARATION_TYPES: tuple[AtomType, ...] = (
    IFin(1), IFin(2), II1(),
    *(cls(k) for cls in (IInf, IIInf, III) for k in range(3)),
)


def _small_values(t: AtomType) -> list[ExtValue]:
    if isinstance(t, IFin):
        return [Fin(Fraction(k, t.n)) for k in range(t.n + 1)]
    if isinstance(t, II1):
        return [Fin(0), Fin(Fraction(1, 2)), Fin(1)]
    if isinstance(t, III):
        return [Fin(0)] + [Aleph(k) for k in range(t.kappa + 1)]
    return [Fin(0), Fin(1), Fin(2)] + [Aleph(k) for k in range(t.kappa + 1)]


def criterion_7() -> tuple[bool, str]:
    failures: list[str] = []
    n_alg = n_pairs = 0
    for size in range(1, 4):
        for types in itertools.product(SEPARATION_TYPES, repeat=size):
            A = AlgebraDesc.of(*types)
            n_alg += 1
            finite = all(isinstance(t, (IFin, II1)) for t in types)
            countable = all(isinstance(t, (IFin, II1)) or t.kappa == 0 for t in types)
            if is_T1(A) != finite:
                failures.append(f"is_T1 on {A}")
            if is_T0(A) != countable or quotient_maps_normal(A) != countable:
                failures.append(f"is_T0/normal on {A}")
            if not countable:
                # aleph 0 and aleph 1 at an uncountable atom share their closures
                i = next(j for j, t in enumerate(types) if not is_finite_type(t) and t.kappa > 0)
                lo = DimElement(A, tuple(Aleph(0) if j == i else Fin(0) for j in range(size)))
                hi = DimElement(A, tuple(Aleph(1) if j == i else Fin(0) for j in range(size)))
                if not (in_closure(lo, ExplicitSet([hi])) and in_closure(hi, ExplicitSet([lo]))):
                    failures.append(f"no T0 witness pair on {A}")
                continue
            grid = _product_grid(A, [_small_values(t) for t in types])
            closures = {q: closure_singleton(q) for q in grid}
            for p, q in itertools.product(grid, repeat=2):
                n_pairs += 1
                if closures[q].contains(p) and not d_leq(p, q):
                    failures.append(f"{p} in closure of {q} on {A}")
    return not failures, (f"{n_alg} algebras, {n_pairs} closure pairs on T0 algebras, "
                          f"{len(failures)} failures{_first(failures)}")


def criterion_8() -> tuple[bool, str]:
    A = AlgebraDesc.of(II1(), name="A")
    B = amplify(A, Aleph(0))
    family = [DimElement(B, (v,)) for v in (Fin(Fraction(1, 2)), Fin(2), Aleph(0))]
    sub = rep_common_sub(A, family)
    sup = rep_common_super(A, family)
    grid_values = [Fin(Fraction(k, 4)) for k in range(17)] + [Fin(Fraction(21, 2)), Aleph(0)]
    grid = [DimElement(B, (v,)) for v in grid_values]
    failures = []
    if sub != DimElement(B, (Fin(Fraction(1, 2)),)):
        failures.append(f"common sub-representation {sub}")
    if sup != DimElement(B, (Aleph(0),)):
        failures.append(f"common super-representation {sup}")
    if not is_greatest_lower_bound(sub, family, grid):
        failures.append("sub-representation not maximal on the grid")
    if not is_least_upper_bound(sup, family, grid):
        failures.append("super-representation not minimal on the grid")
    return not failures, f"sub {sub}, super {sup}, grid of {len(grid)}{_first(failures)}"


CRITERIA: tuple[tuple[int, str, Callable[[], tuple[bool, str]]], ...] = (
    (1, "slice construction matches per-atom chain bounds", criterion_1),
    (2, "sup and inf are least and greatest on the grid", criterion_2),
    (3, "lattice and monoid laws", criterion_3),
    (4, "cardinal absorption laws", criterion_4),
    (5, "finite-dimensional rank oracle", criterion_5),
    (6, "closures of single classes", criterion_6),
    (7, "separation predicates", criterion_7),
    (8, "common sub- and super-representations", criterion_8),
)


def run_criterion(number: int) -> CriterionResult:
    num, name, fn = next(c for c in CRITERIA if c[0] == number)
    saved = extval.max_aleph()
    extval.set_max_aleph(extval.DEFAULT_MAX_ALEPH)
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed criterion, not a crashed report
        ok, detail = False, f"raised {type(exc).__name__}: {exc}"
    finally:
        extval.set_max_aleph(saved)
    return CriterionResult(num, name, ok, detail, time.perf_counter() - start)


def run_all(numbers: Iterable[int] = (1, 2, 3, 4, 5, 6, 7, 8)) -> Iterator[CriterionResult]:
    for n in numbers:
        yield run_criterion(n)
