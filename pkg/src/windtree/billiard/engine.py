"""Event-driven specular billiard flow in a periodic table.

The state keeps a position inside the fundamental domain plus the integer
lattice offset of the current copy, so displacement stays exact in the
number of periods crossed. Floating runs use the compiled kernel when
available; exact runs feed :class:`fractions.Fraction` values through the
pure-Python kernel with zero tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .. import _pycore, kernels
from ..errors import CornerHit, DomainViolation
from ..table import WindTreeTable
from .geometry import Wall, is_free, table_walls

DEFAULT_CORNER_TOL = 1e-12
MAX_EVENTS = 1 << 62


@dataclass(frozen=True)
class TrajectoryState:
    """Position ``(x, y)`` in the domain, lattice offset ``(ix, iy)``, unit
    direction ``(dx, dy)`` and elapsed path length ``t``."""

    x: float
    y: float
    ix: int
    iy: int
    dx: float
    dy: float
    t: float = 0
    x0: float | None = None
    y0: float | None = None
    dx0: float | None = None
    dy0: float | None = None
    max_disp2: float = 0

    def __post_init__(self) -> None:
        for name, cur in (("x0", self.x), ("y0", self.y), ("dx0", self.dx), ("dy0", self.dy)):
            if getattr(self, name) is None:
                object.__setattr__(self, name, cur)

    @property
    def parity(self) -> tuple[int, int]:
        """Reflection parity ``(eps_x, eps_y)``: 1 where the direction
        component has flipped sign since launch."""
        return (int((self.dx > 0) != (self.dx0 > 0)), int((self.dy > 0) != (self.dy0 > 0)))

    def displacement(self, L1: float, L2: float) -> tuple[float, float]:
        return (self.ix * L1 + self.x - self.x0, self.iy * L2 + self.y - self.y0)

    def reversed(self) -> TrajectoryState:
        return replace(self, dx=-self.dx, dy=-self.dy)


def unit_direction(direction: float | Sequence[float]) -> tuple[float, float]:
    """Angle (radians) or vector, normalised to unit length."""
    if isinstance(direction, (int, float)):
        return math.cos(direction), math.sin(direction)
    dx, dy = (float(c) for c in direction)
    norm = math.hypot(dx, dy)
    if norm == 0:
        raise ValueError("direction must be nonzero")
    return dx / norm, dy / norm


class Billiard:
    """Specular billiard in ``table`` with axis-parallel walls.

    ``exact=True`` keeps every coordinate a :class:`Fraction`; directions
    are then used as given (any rational vector) and time is measured in
    units of that vector, which keeps the flow rational.
    """

    def __init__(self, table: WindTreeTable, corner_tol: float = DEFAULT_CORNER_TOL, exact: bool = False):
        self.table = table
        self.exact = exact
        self.corner_tol = Fraction(0) if exact else float(corner_tol)
        self.walls: list[Wall] = table_walls(table, exact=exact)
        conv = Fraction if exact else float
        self.L1 = conv(table.L1)
        self.L2 = conv(table.L2)
        self._walls_arg = self.walls if exact or kernels.BACKEND == "python" else _as_array(self.walls)

    def launch(self, x: float, y: float, direction: float | Sequence[float]) -> TrajectoryState:
        if not (0 <= x <= self.L1 and 0 <= y <= self.L2):
            raise DomainViolation(f"start {(x, y)} outside the fundamental domain")
        if not is_free(self.table, float(x), float(y)):
            raise DomainViolation(f"start {(x, y)} lies inside an obstacle")
        if self.exact:
            dx, dy = (Fraction(c) for c in direction)
            if dx == 0 and dy == 0:
                raise ValueError("direction must be nonzero")
            return TrajectoryState(Fraction(x), Fraction(y), 0, 0, dx, dy, Fraction(0))
        dx, dy = unit_direction(direction)
        return TrajectoryState(float(x), float(y), 0, 0, dx, dy, 0.0)

    def _run(self, s: TrajectoryState, t_end, sample_times, log=None):
        trace = _pycore.trace if (self.exact or log is not None) else kernels.trace
        walls = self.walls if trace is _pycore.trace else self._walls_arg
        return trace(
            walls, self.L1, self.L2, s.x, s.y, s.ix, s.iy, s.dx, s.dy, s.t, t_end,
            s.x0, s.y0, s.max_disp2, sample_times, self.corner_tol, MAX_EVENTS, log,
        )

    def _state(self, s: TrajectoryState, out) -> TrajectoryState:
        _, x, y, ix, iy, dx, dy, t, md2, _, _ = out
        return replace(s, x=x, y=y, ix=int(ix), iy=int(iy), dx=dx, dy=dy, t=t, max_disp2=md2)

    def advance(self, s: TrajectoryState, duration, log: list | None = None) -> TrajectoryState:
        """Flow ``s`` for ``duration``. Raises :class:`CornerHit` (with the
        state at the corner as ``partial``) if the path meets a corner."""
        out = self._run(s, s.t + duration, [], log)
        new = self._state(s, out)
        if out[-1] == kernels.CORNER:
            raise CornerHit(f"corner hit at t={float(new.t):.6g}, position {(float(new.x), float(new.y))}", partial=new)
        return new

    def sample(self, s: TrajectoryState, times: Sequence[float]) -> tuple[TrajectoryState, list[float]]:
        """Advance to ``times[-1]``, returning the running maximal squared
        displacement at each of the (increasing) ``times``."""
        t_end = times[-1]
        out = self._run(s, t_end, list(times))
        new = self._state(s, out)
        samples = list(out[0])
        if out[-1] == kernels.CORNER:
            raise CornerHit(f"corner hit at t={float(new.t):.6g}", partial=(new, samples))
        return new, samples


def _as_array(walls: list[Wall]):
    import numpy as np

    return np.asarray(walls, dtype=np.float64).reshape(-1, 5)
