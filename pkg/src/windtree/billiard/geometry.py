"""Wall lists and free-region tests for periodic tables.

A wall is ``(axis, coord, lo, hi, normal)``: ``axis == 0`` is the vertical
segment ``x = coord, lo <= y <= hi`` and ``axis == 1`` the horizontal
segment ``y = coord, lo <= x <= hi``. ``normal`` is the sign of the outward
normal of the obstacle, i.e. it points into the free region.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..table import Point, WindTreeTable, _drop_collinear, point_in_polygon, signed_area, table_polygons

Wall = tuple[float, float, float, float, float]

# lifted obstacles may stick out of the domain by up to one period
_SHIFTS = (-2, -1, 0, 1, 2)


def _ccw(poly: Sequence[Point]) -> list[Point]:
    pts = _drop_collinear(list(poly))
    return pts if signed_area(pts) > 0 else list(reversed(pts))


def polygon_walls(poly: Sequence[Point]) -> list[Wall]:
    """Edges of a right-angled polygon as walls (unbounded plane)."""
    pts = _ccw(poly)
    out: list[Wall] = []
    for (ax, ay), (bx, by) in zip(pts, pts[1:] + pts[:1]):
        if ax == bx:
            out.append((0, ax, min(ay, by), max(ay, by), 1 if by > ay else -1))
        elif ay == by:
            out.append((1, ay, min(ax, bx), max(ax, bx), -1 if bx > ax else 1))
        else:
            raise ValueError(f"edge {(ax, ay)} -> {(bx, by)} is not axis-parallel")
    return out


def table_walls(table: WindTreeTable, exact: bool = False) -> list[Wall]:
    """Every lattice translate of every obstacle edge that meets the closed
    fundamental domain. Endpoints are kept unclipped so that only genuine
    obstacle corners register as corners."""
    conv = Fraction if exact else float
    L1, L2 = conv(table.L1), conv(table.L2)
    out: list[Wall] = []
    seen = set()
    for poly in table_polygons(table):
        for axis, c, lo, hi, nrm in polygon_walls(poly):
            c, lo, hi = conv(c), conv(lo), conv(hi)
            for a in _SHIFTS:
                for b in _SHIFTS:
                    if axis == 0:
                        cc, ll, hh = c + a * L1, lo + b * L2, hi + b * L2
                        inside = 0 <= cc <= L1 and hh >= 0 and ll <= L2
                    else:
                        cc, ll, hh = c + b * L2, lo + a * L1, hi + a * L1
                        inside = 0 <= cc <= L2 and hh >= 0 and ll <= L1
                    if inside:
                        w = (axis, cc, ll, hh, nrm)
                        if w not in seen:
                            seen.add(w)
                            out.append(w)
    return out


def is_free(table: WindTreeTable, x: float, y: float) -> bool:
    """``True`` when ``(x, y)`` (domain coordinates) is not inside an obstacle."""
    for poly in table_polygons(table):
        for a in _SHIFTS:
            for b in _SHIFTS:
                if point_in_polygon(poly, x - a * table.L1, y - b * table.L2):
                    return False
    return True
