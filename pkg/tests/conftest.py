"""
This file contains shared fixtures and hypothesis strategies for the test suite.
Fixtures defined here are automatically discovered by pytest and can be used in any test file.
"""

import os

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from main import GTSFApp, create_app
from src.documents.repositories.fixture import FixtureRepository
from src.gtsf.core import GTSFSet, GTSFValue, TSFValue

# "fast" is loaded by default; `pytest --hypothesis-profile=thorough` runs the
# full 10,000-example property suites.
settings.register_profile("fast", max_examples=200, deadline=None)
settings.register_profile("thorough", max_examples=10_000, deadline=None)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "fast"))


# ==================================
# Strategies
# ==================================

unit_floats = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
exponents = st.integers(min_value=1, max_value=6)


@st.composite
def tsfvs(draw, t: int, nonzero: bool = False) -> TSFValue:
    """
    Draws a TSFV that satisfies the constraint at exponent t.

    Raw grades are scaled by s^(-1/t) whenever their power sum s exceeds 1,
    which puts the point back on the constraint surface.
    """
    lower = 0.05 if nonzero else 0.0
    grades = [draw(st.floats(min_value=lower, max_value=1.0, allow_nan=False)) for _ in range(3)]
    s = sum(g**t for g in grades)
    if s > 1.0:
        scale = s ** (-1.0 / t)
        grades = [min(g * scale, 1.0) for g in grades]
    return TSFValue(*grades)


@st.composite
def gtsfvs(draw, t: int, nonzero: bool = False) -> GTSFValue:
    return GTSFValue(draw(tsfvs(t, nonzero)), draw(unit_floats))


@st.composite
def gtsf_sets(draw, t: int, labels: tuple[str, ...] = ("x1", "x2", "x3")) -> GTSFSet:
    return GTSFSet({label: draw(gtsfvs(t)) for label in labels})


@st.composite
def weight_vectors(draw, n: int) -> tuple[float, ...]:
    """Strictly positive weights normalised to sum to 1."""
    raw = [draw(st.floats(min_value=0.05, max_value=1.0)) for _ in range(n)]
    total = sum(raw)
    return tuple(w / total for w in raw)


# ==================================
# Fixtures
# ==================================


@pytest.fixture(scope="session")
def fixture_repo() -> FixtureRepository:
    """The repository of bundled example documents."""
    return FixtureRepository()


@pytest.fixture
def app() -> GTSFApp:
    """A fully wired CLI application with every command loaded."""
    return create_app()
