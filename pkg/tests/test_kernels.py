from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import MANY, origamis
from windtree import _pycore, kernels
from windtree.billiard.geometry import table_walls
from windtree.table import family_table, rectangle_table

ccore = pytest.importorskip("windtree._ccore", reason="compiled kernel not built")


@settings(max_examples=MANY)
@given(origamis(max_n=12))
def test_canonical_pair_backends_agree(o):
    assert ccore.canonical_pair(list(o.r), list(o.u)) == _pycore.canonical_pair(list(o.r), list(o.u))


@pytest.mark.parametrize("table", [rectangle_table(1.0, 1.0, 0.5, 0.3), family_table(1), family_table(3)], ids=["rect", "m1", "m3"])
@settings(max_examples=50)
@given(angle=st.floats(0.01, 2 * math.pi - 0.01), frac=st.floats(0.05, 0.12))
def test_trace_backends_agree(table, angle, frac):
    import numpy as np

    walls = table_walls(table)
    args = (1.0, 1.0, frac, frac, 0, 0, math.cos(angle), math.sin(angle), 0.0, 500.0, frac, frac, 0.0)
    times = [10.0, 100.0, 500.0]
    py = _pycore.trace(walls, *args, times, 1e-12, 10**7)
    cy = ccore.trace(np.asarray(walls, dtype=np.float64), *args, times, 1e-12, 10**7)
    assert py[-1] == cy[-1]
    assert py[9] == cy[9]  # event count
    assert (py[3], py[4]) == (cy[3], cy[4])
    assert py[1] == pytest.approx(cy[1], abs=1e-9)
    assert py[2] == pytest.approx(cy[2], abs=1e-9)
    assert list(py[0]) == pytest.approx(list(cy[0]), rel=1e-12)


def test_backend_selection():
    assert kernels.BACKEND in ("python", "cython")
    assert kernels.compiled_available()


def test_compiled_kernel_refuses_logging():
    import numpy as np

    walls = np.asarray(table_walls(family_table(1)), dtype=np.float64)
    with pytest.raises(ValueError):
        ccore.trace(walls, 1.0, 1.0, 0.1, 0.1, 0, 0, 1.0, 0.0, 0.0, 1.0, 0.1, 0.1, 0.0, [], 1e-12, 10, [])
