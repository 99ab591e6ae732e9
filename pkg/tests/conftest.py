from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from dimlat.algebra import II1, III, IFin, IIInf, IInf, AlgebraDesc
from dimlat.dimfun import DimElement
from dimlat.extval import DEFAULT_MAX_ALEPH, Aleph, Fin, set_max_aleph

settings.register_profile("dimlat", max_examples=200, deadline=None)
settings.load_profile("dimlat")

MAX_LEVEL = 3


@pytest.fixture(autouse=True)
def _default_aleph_range():
    set_max_aleph(DEFAULT_MAX_ALEPH)
    yield
    set_max_aleph(DEFAULT_MAX_ALEPH)


rationals = st.builds(Fraction, st.integers(0, 40), st.integers(1, 12))
fins = rationals.map(Fin)
alephs = st.integers(0, MAX_LEVEL).map(Aleph)
ext_values = st.one_of(fins, alephs)

atom_types = st.one_of(
    st.integers(1, 4).map(IFin),
    st.just(II1()),
    st.integers(0, MAX_LEVEL).map(IInf),
    st.integers(0, MAX_LEVEL).map(IIInf),
    st.integers(0, MAX_LEVEL).map(III),
)

algebras = st.lists(atom_types, min_size=1, max_size=5).map(lambda ts: AlgebraDesc.of(*ts))


@st.composite
def atom_value(draw, t, cone=False):
    """A projection-class (or cone-class) value on an atom of type ``t``."""
    if isinstance(t, IFin):
        if cone:
            return draw(fins)
        return Fin(Fraction(draw(st.integers(0, t.n)), t.n))
    if isinstance(t, II1):
        q = draw(rationals)
        return Fin(q) if cone else Fin(min(q, Fraction(1)))
    if draw(st.booleans()):
        return Aleph(draw(st.integers(0, t.kappa)))
    if isinstance(t, III):
        return Fin(0)
    if isinstance(t, IInf) and not cone:
        return Fin(draw(st.integers(0, 6)))
    return draw(fins)


@st.composite
def elements(draw, A, cone=False):
    return DimElement(A, tuple(draw(atom_value(t, cone)) for t in A.types))


@st.composite
def algebra_and_elements(draw, n, cone=False):
    A = draw(algebras)
    return A, [draw(elements(A, cone)) for _ in range(n)]


# one line per acceptance criterion, printed after the run
acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(acceptance_lines, key=lambda s: int(s.split()[1].rstrip("."))):
            terminalreporter.write_line(line)
