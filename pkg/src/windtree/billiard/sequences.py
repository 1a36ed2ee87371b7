"""Square-crossing sequences, used to compare a billiard path on an integer
table with the straight line on the unfolded origami."""

from __future__ import annotations

from fractions import Fraction
from math import floor

from ..errors import CornerHit, DomainViolation
from ..origami import Origami
from ..table import WindTreeTable, _square_index, unfold_to_origami
from .engine import Billiard

Square = tuple[int, int, int, int]


def _crossings(p: Fraction, v: Fraction, dt: Fraction) -> list[Fraction]:
    """Times in ``(0, dt)`` at which ``p + s v`` is an integer."""
    if v == 0:
        return []
    out = []
    if v > 0:
        k = floor(p) + 1
        while (s := (k - p) / v) < dt:
            out.append(s)
            k += 1
    else:
        k = -floor(-p) - 1
        while (s := (k - p) / v) < dt:
            out.append(s)
            k -= 1
    return out


def cell_sequence(log: list, dx0: Fraction, dy0: Fraction) -> list[Square]:
    """Cells and sheets visited between consecutive integer-line crossings.

    On an integer table every wall hit and domain exit lies on an integer
    line, so each log segment starts on a crossing and each interval between
    crossings is one square of the unfolded surface. The sheet ``(ex, ey)``
    records which direction components are reversed relative to the launch
    direction ``(dx0, dy0)``. A trailing ``"end"`` segment stops mid-square;
    its square is repeated by the next call and must be dropped by the caller.
    """
    seq: list[Square] = []
    for x, y, dx, dy, dt, _ in log:
        if dt == 0:
            continue
        cuts = sorted(set(_crossings(x, dx, dt) + _crossings(y, dy, dt)))
        bounds = [Fraction(0)] + cuts + [dt]
        ex, ey = int((dx > 0) != (dx0 > 0)), int((dy > 0) != (dy0 > 0))
        for a, b in zip(bounds, bounds[1:]):
            mid = (a + b) / 2
            seq.append((floor(x + mid * dx), floor(y + mid * dy), ex, ey))
    return seq


def billiard_square_sequence(table: WindTreeTable, start: tuple, direction: tuple[int, int], crossings: int) -> list[int]:
    """Exact billiard run from ``start`` along the integer vector
    ``direction`` (both components positive), translated into unfolded
    square labels, ``crossings + 1`` entries long."""
    p, q = direction
    if p <= 0 or q <= 0:
        raise ValueError("direction components must be positive")
    bill = Billiard(table, exact=True)
    state = bill.launch(Fraction(start[0]), Fraction(start[1]), (p, q))
    idx = _square_index(table.free_cells)
    # one unit of parameter time crosses at most p + q integer lines
    chunk = Fraction(crossings, p + q) + 1
    seq: list[int] = []
    continuing = False
    while len(seq) <= crossings:
        log: list = []
        try:
            state = bill.advance(state, chunk, log)
        except CornerHit as exc:
            raise DomainViolation("path meets an obstacle corner; choose another start") from exc
        cells = cell_sequence(log, Fraction(p), Fraction(q))
        if continuing:
            cells = cells[1:]
        seq.extend(idx[c] for c in cells)
        continuing = bool(log) and log[-1][-1] == "end"
    return seq[: crossings + 1]


def origami_square_sequence(o: Origami, square: int, local: tuple, direction: tuple[int, int], crossings: int) -> list[int]:
    """Squares visited by the straight line of slope ``q/p`` on ``o`` from
    ``local`` (coordinates inside ``square``)."""
    p, q = (Fraction(c) for c in direction)
    lx, ly = (Fraction(c) for c in local)
    seq = [square]
    cur = square
    while len(seq) <= crossings:
        sx = (1 - lx) / p
        sy = (1 - ly) / q
        if sx == sy:
            raise DomainViolation("line passes through a vertex of the tiling")
        if sx < sy:
            ly += sx * q
            lx = Fraction(0)
            cur = o.r[cur]
        else:
            lx += sy * p
            ly = Fraction(0)
            cur = o.u[cur]
        seq.append(cur)
    return seq


def unfolding_sequences(table: WindTreeTable, start: tuple, direction: tuple[int, int], crossings: int) -> tuple[list[int], list[int]]:
    """Billiard and origami square sequences for the same initial data."""
    o = unfold_to_origami(table)
    idx = _square_index(table.free_cells)
    x0, y0 = (Fraction(c) for c in start)
    cx, cy = floor(x0), floor(y0)
    if (cx, cy) in table.blocked:
        raise DomainViolation("start point lies in a blocked cell")
    square = idx[(cx, cy, 0, 0)]
    a = billiard_square_sequence(table, (x0, y0), direction, crossings)
    b = origami_square_sequence(o, square, (x0 - cx, y0 - cy), direction, crossings)
    return a, b
