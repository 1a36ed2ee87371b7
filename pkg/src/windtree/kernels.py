"""Kernel selection: compiled extension when importable, Python otherwise.

Set ``WINDTREE_PURE_PYTHON=1`` to force the fallback (used by the test
suite to cross-check both backends and by ``benchmarks/bench_kernels.py``).
"""

from __future__ import annotations

import os

from . import _pycore

BACKEND = "python"
canonical_pair = _pycore.canonical_pair
trace = _pycore.trace

if os.environ.get("WINDTREE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ccore
    except ImportError:  # extension not built
        _ccore = None
    if _ccore is not None:
        BACKEND = "cython"
        canonical_pair = _ccore.canonical_pair
        trace = _ccore.trace

OK = _pycore.OK
CORNER = _pycore.CORNER
MAX_EVENTS = _pycore.MAX_EVENTS


def compiled_available() -> bool:
    try:
        from . import _ccore  # noqa: F401
    except ImportError:
        return False
    return True
