"""Compiled versus pure-Python kernels.

Run with ``python benchmarks/bench_kernels.py``. Both backends are loaded
side by side (``windtree._ccore`` and ``windtree._pycore``) and timed on the
same inputs: canonical forms over the chessboard quotient's orbit, and a
billiard trajectory in a generic staircase table.
"""

from __future__ import annotations

import argparse
import time

from windtree import _pycore
from windtree.billiard.geometry import table_walls
from windtree.table import family_table, quotient_by_tau_v, chessboard_table
from windtree.teichcurve import act_S, act_T

try:
    from windtree import _ccore
except ImportError:  # extension not built
    _ccore = None


def _timeit(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def canonical_inputs(count: int):
    o = quotient_by_tau_v(chessboard_table())
    pairs = []
    for k in range(count):
        o = act_T(o) if k % 3 else act_S(o)
        pairs.append((o.r, o.u))
    return pairs


def bench_canonical(mod, pairs) -> None:
    for r, u in pairs:
        mod.canonical_pair(r, u)


def bench_trace(mod, walls, t_end: float) -> None:
    mod.trace(walls, 1.0, 1.0, 0.05, 0.05, 0, 0, 0.6, 0.8, 0.0, t_end, 0.05, 0.05, 0.0, [t_end], 1e-12, 1 << 62, None)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=300)
    ap.add_argument("--t-end", type=float, default=2e5)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    pairs = canonical_inputs(args.pairs)
    walls = table_walls(family_table(3))
    backends = [("python", _pycore)] + ([("cython", _ccore)] if _ccore else [])
    results: dict[str, dict[str, float]] = {}
    for name, mod in backends:
        results[name] = {
            "canonical_pair": _timeit(lambda: bench_canonical(mod, pairs), args.repeat),
            "trace": _timeit(lambda: bench_trace(mod, walls, args.t_end), args.repeat),
        }
    print(f"{'kernel':<16}" + "".join(f"{n:>12}" for n, _ in backends) + ("     speedup" if _ccore else ""))
    for kernel in ("canonical_pair", "trace"):
        row = f"{kernel:<16}" + "".join(f"{results[n][kernel]:>11.4f}s" for n, _ in backends)
        if _ccore:
            row += f"{results['python'][kernel] / results['cython'][kernel]:>11.1f}x"
        print(row)
    if not _ccore:
        print("compiled extension not built; only the Python backend was timed")


if __name__ == "__main__":
    main()
