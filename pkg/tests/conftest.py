from __future__ import annotations

import os
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, assume, settings
from hypothesis import strategies as st

from windtree.origami import Origami, is_connected
from windtree.profile import SingularityProfile
from windtree.table import WindTreeTable

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# the invariant suites run at least this many randomized cases
MANY = 1000


@st.composite
def permutations_of(draw, n: int) -> tuple[int, ...]:
    return tuple(draw(st.permutations(range(n))))


@st.composite
def origamis(draw, min_n: int = 1, max_n: int = 30, connected: bool = True) -> Origami:
    n = draw(st.integers(min_n, max_n))
    o = Origami(draw(permutations_of(n)), draw(permutations_of(n)))
    if connected:
        assume(is_connected(o))
    return o


@st.composite
def genus0_profiles(draw, max_zeros: int = 4) -> SingularityProfile:
    """Quadratic genus-zero profiles with at least five singularities."""
    zeros = draw(st.lists(st.integers(1, 4), min_size=1, max_size=max_zeros))
    poles = sum(zeros) + 4
    assume(len(zeros) + poles <= 11)
    return SingularityProfile(zeros + [-1] * poles, "quadratic")


@st.composite
def rectangle_tables(draw) -> WindTreeTable:
    """Integer tables with one rectangular obstacle leaving corridors."""
    L1 = draw(st.integers(2, 5))
    L2 = draw(st.integers(2, 5))
    a = draw(st.integers(1, L1 - 1))
    b = draw(st.integers(1, L2 - 1))
    x0 = draw(st.integers(0, L1 - 1))
    y0 = draw(st.integers(0, L2 - 1))
    cells = {((x0 + i) % L1, (y0 + j) % L2) for i in range(a) for j in range(b)}
    return WindTreeTable(L1, L2, frozenset(cells))


def generic_start(table: WindTreeTable, p: int, q: int, seed: int) -> tuple[Fraction, Fraction]:
    """A rational start in a free cell whose line avoids lattice points."""
    free = table.free_cells
    cx, cy = free[seed % len(free)]
    fx = Fraction(1 + (seed * 7) % 89, 97)
    fy = Fraction(1 + (seed * 13) % 83, 101)
    x, y = cx + fx, cy + fy
    if (q * x - p * y).denominator == 1:
        x += Fraction(1, 997)
    return x, y


@pytest.fixture
def fourteen_square_origamis() -> list[Origami]:
    return [
        Origami.from_cycles("(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)", "(1,3,13,8,2,14)(4,6,11,5,10,12)(7,9)"),
        Origami.from_cycles("(1,2,3,4,5,6,7,8)(9,10,11,12,13,14)", "(1,2,3,14,9)(4,13)(5,6,7,11,12)(8,10)"),
    ]


@st.composite
def integer_staircase_tables(draw, m: int) -> WindTreeTable:
    """Integer tables in ``B(m)``: one doubly symmetric staircase obstacle."""
    from windtree.table import staircase_polygon

    xs = sorted(draw(st.lists(st.integers(1, 5), min_size=m, max_size=m, unique=True)))
    ys = sorted(draw(st.lists(st.integers(1, 5), min_size=m, max_size=m, unique=True)), reverse=True)
    L1 = 2 * xs[-1] + draw(st.integers(1, 3))
    L2 = 2 * ys[0] + draw(st.integers(1, 3))
    cx = xs[-1] + draw(st.integers(0, L1 - 2 * xs[-1] - 1))
    return WindTreeTable(L1, L2, polygons=(staircase_polygon(cx, ys[0], xs, ys),))
