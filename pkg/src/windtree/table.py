"""Periodic wind-tree tables: family metadata, unfolding to origamis, and
the reflection symmetries of the unfolded surface.

Integer tables are an ``L1 x L2`` grid of unit cells on the torus with a set
of blocked cells. Real tables (simulation only) carry right-angled polygons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    AsymmetricObstacle,
    CornerCountMismatch,
    DisconnectedFreeRegion,
    ObstacleTouchesBoundary,
    PatternNotSublatticeInvariant,
    SymmetryNotFound,
)
from .origami import (
    Origami,
    Perm,
    antiautomorphisms,
    group_closure,
    is_connected,
    perm_compose,
    quotient_by_translation_involution,
    translation_automorphisms,
)
from .profile import SingularityProfile

Cell = tuple[int, int]
Point = tuple[float, float]


@dataclass(frozen=True)
class WindTreeTable:
    """A periodic table.

    ``blocked`` holds unit cells ``(x, y)`` with ``0 <= x < L1``,
    ``0 <= y < L2`` (integer tables). ``polygons`` holds obstacle vertex
    lists in domain coordinates (real tables); a table has one or the other.
    """

    L1: float
    L2: float
    blocked: frozenset[Cell] = frozenset()
    polygons: tuple[tuple[Point, ...], ...] = ()

    def __post_init__(self) -> None:
        if self.L1 <= 0 or self.L2 <= 0:
            raise ValueError("fundamental domain must have positive size")
        object.__setattr__(self, "blocked", frozenset((int(x), int(y)) for x, y in self.blocked))
        if self.blocked and self.polygons:
            raise ValueError("give blocked cells or polygons, not both")
        for x, y in self.blocked:
            if not (0 <= x < self.L1 and 0 <= y < self.L2):
                raise ValueError(f"cell {(x, y)} outside the {self.L1}x{self.L2} domain")

    @property
    def is_integer(self) -> bool:
        return not self.polygons and float(self.L1).is_integer() and float(self.L2).is_integer()

    @property
    def free_cells(self) -> list[Cell]:
        L1, L2 = int(self.L1), int(self.L2)
        return [(x, y) for y in range(L2) for x in range(L1) if (x, y) not in self.blocked]

    # ------------------------------------------------------------------ I/O
    @classmethod
    def parse(cls, text: str) -> WindTreeTable:
        """Table file: ``L1 L2`` then either ``x y`` blocked cells, or a
        ``POLY`` header followed by ``x y`` vertices (``POLY`` again starts
        another obstacle)."""
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise ValueError("empty table file")
        a, b = lines[0].split()
        polys: list[list[Point]] = []
        cells: list[Cell] = []
        for ln in lines[1:]:
            if ln.upper() == "POLY":
                polys.append([])
                continue
            px, py = ln.split()
            if polys:
                polys[-1].append((_num(px), _num(py)))
            else:
                cells.append((int(px), int(py)))
        if polys:
            return cls(_num(a), _num(b), polygons=tuple(tuple(p) for p in polys))
        return cls(int(a), int(b), frozenset(cells))

    def to_text(self) -> str:
        out = [f"{_fmt(self.L1)} {_fmt(self.L2)}"]
        if self.polygons:
            for poly in self.polygons:
                out.append("POLY")
                out.extend(f"{_fmt(x)} {_fmt(y)}" for x, y in poly)
        else:
            out.extend(f"{x} {y}" for x, y in sorted(self.blocked, key=lambda c: (c[1], c[0])))
        return "\n".join(out) + "\n"


def _num(s: str) -> float:
    value = Fraction(s)
    return int(value) if value.denominator == 1 else float(value)


def _fmt(v: float) -> str:
    return str(int(v)) if float(v).is_integer() else repr(float(v))


# ---------------------------------------------------------------- builders


def rectangle_table(L1: float, L2: float, a: float, b: float) -> WindTreeTable:
    """Classical wind-tree: an ``a x b`` rectangle centred in the domain."""
    x0, y0 = (L1 - a) / 2, (L2 - b) / 2
    return WindTreeTable(L1, L2, polygons=(((x0, y0), (x0 + a, y0), (x0 + a, y0 + b), (x0, y0 + b)),))


def staircase_polygon(cx: float, cy: float, xs: Sequence[float], ys: Sequence[float]) -> tuple[Point, ...]:
    """Doubly symmetric staircase obstacle centred at ``(cx, cy)``.

    ``xs`` increasing and ``ys`` decreasing half-extents: the quadrant
    boundary runs from ``(0, ys[0])`` through the steps ``(xs[k], ys[k])``
    down to ``(xs[-1], 0)``. With ``s`` steps the obstacle has ``4s``
    convex corners, so it belongs to the family ``m = s``.
    """
    if len(xs) != len(ys) or not xs:
        raise ValueError("need matching, non-empty step lists")
    if any(b <= a for a, b in zip(xs, xs[1:])) or any(b >= a for a, b in zip(ys, ys[1:])):
        raise ValueError("xs must increase and ys decrease")
    quadrant: list[Point] = []
    for k in range(len(xs)):
        quadrant.append((xs[k], ys[k]))
        if k + 1 < len(xs):
            quadrant.append((xs[k], ys[k + 1]))
    q1 = list(reversed(quadrant))
    q2 = [(-x, y) for x, y in quadrant]
    q3 = [(-x, -y) for x, y in reversed(quadrant)]
    q4 = [(x, -y) for x, y in quadrant]
    pts = q1 + q2 + q3 + q4
    return tuple((cx + x, cy + y) for x, y in pts)


def staircase_table(L1: float, L2: float, xs: Sequence[float], ys: Sequence[float]) -> WindTreeTable:
    return WindTreeTable(L1, L2, polygons=(staircase_polygon(L1 / 2, L2 / 2, xs, ys),))


def cross_polygon(cx: float, cy: float, arm: float, half_width: float) -> tuple[Point, ...]:
    """Plus-shaped obstacle: two bars of half-length ``arm`` and half-width
    ``half_width`` crossing at ``(cx, cy)``."""
    a, w = arm, half_width
    pts = [(a, -w), (a, w), (w, w), (w, a), (-w, a), (-w, w), (-a, w), (-a, -w), (-w, -w), (-w, -a), (w, -a), (w, -w)]
    return tuple((cx + x, cy + y) for x, y in pts)


def family_table(m: int, L: float = 1.0) -> WindTreeTable:
    """A fixed generic member of ``B(m)``: one staircase obstacle with ``m``
    steps per quadrant in an ``L x L`` domain. Step sizes are perturbed by
    fractional parts of multiples of sqrt 2 and sqrt 3 so that no two
    lengths are rationally related in an obvious way."""
    if m < 1:
        raise ValueError("m must be >= 1")
    r2, r3 = math.sqrt(2), math.sqrt(3)
    xs = [0.36 * L * ((k + 1) - 0.3 * (((k + 1) * r2) % 1)) / m for k in range(m)]
    ys = [0.33 * L * ((m - k) - 0.3 * (((k + 1) * r3) % 1)) / m for k in range(m)]
    return staircase_table(L, L, xs, ys)


def chessboard_table() -> WindTreeTable:
    """Square obstacles on a 2x2 pattern with one obstacle in four removed."""
    return WindTreeTable(4, 4, frozenset({(0, 0), (2, 0), (0, 2)}))


def classical_integer_table() -> WindTreeTable:
    """2x2 domain with a single unit obstacle (the smallest square-tiled
    classical wind-tree)."""
    return WindTreeTable(2, 2, frozenset({(0, 0)}))


# ------------------------------------------------------------- polygon data


def polygon_from_cells(cells: Iterable[Cell]) -> list[Point]:
    """Boundary of a simply connected union of unit cells (plane
    coordinates), counter-clockwise, collinear vertices removed."""
    cells = set(cells)
    edges: dict[tuple[int, int], tuple[int, int]] = {}
    for x, y in cells:
        # ccw around each cell; keep edges not shared with a neighbour
        if (x, y - 1) not in cells:
            edges[(x, y)] = (x + 1, y)
        if (x + 1, y) not in cells:
            edges[(x + 1, y)] = (x + 1, y + 1)
        if (x, y + 1) not in cells:
            edges[(x + 1, y + 1)] = (x, y + 1)
        if (x - 1, y) not in cells:
            edges[(x, y + 1)] = (x, y)
    start = min(edges)
    loop = [start]
    cur = edges[start]
    while cur != start:
        loop.append(cur)
        if cur not in edges:
            raise ValueError("cell set boundary is not a single loop")
        cur = edges[cur]
    if len(loop) != len(edges):
        raise ValueError("cell set is not simply connected (several boundary loops)")
    return _drop_collinear(loop)


def _drop_collinear(loop: list) -> list:
    out = []
    k = len(loop)
    for i in range(k):
        a, b, c = loop[i - 1], loop[i], loop[(i + 1) % k]
        if (a[0] == b[0] == c[0]) or (a[1] == b[1] == c[1]):
            continue
        out.append(b)
    return out


def point_in_polygon(poly: Sequence[Point], x: float, y: float) -> bool:
    """Strict interior test by ray casting (points on the boundary may go
    either way; callers only query points off the boundary)."""
    inside = False
    n = len(poly)
    for i in range(n):
        (ax, ay), (bx, by) = poly[i], poly[(i + 1) % n]
        if (ay > y) != (by > y):
            xc = ax + (y - ay) * (bx - ax) / (by - ay)
            if xc > x:
                inside = not inside
    return inside


def rasterize(table: WindTreeTable) -> WindTreeTable:
    """Integer polygon table -> blocked-cell table. Every vertex and the
    domain must be integral; a cell is blocked when its centre lies inside
    some periodic copy of an obstacle."""
    if not table.polygons:
        return table
    vals = [table.L1, table.L2] + [c for poly in table.polygons for p in poly for c in p]
    if any(Fraction(v).denominator != 1 for v in vals):
        raise ValueError("rasterization needs integer vertices and domain")
    L1, L2 = int(table.L1), int(table.L2)
    blocked = set()
    for poly in table.polygons:
        pts = [(Fraction(x), Fraction(y)) for x, y in poly]
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        for cx in range(math.floor(min(xs)), math.ceil(max(xs))):
            for cy in range(math.floor(min(ys)), math.ceil(max(ys))):
                if point_in_polygon(pts, cx + Fraction(1, 2), cy + Fraction(1, 2)):
                    cell = (cx % L1, cy % L2)
                    if cell in blocked:
                        raise ObstacleTouchesBoundary(f"obstacles overlap in cell {cell}")
                    blocked.add(cell)
    return WindTreeTable(L1, L2, frozenset(blocked))


def signed_area(poly: Sequence[Point]) -> float:
    return sum(x0 * y1 - x1 * y0 for (x0, y0), (x1, y1) in zip(poly, list(poly[1:]) + [poly[0]])) / 2


def corner_census(poly: Sequence[Point]) -> tuple[int, int]:
    """``(convex, reflex)`` corner counts of a right-angled polygon."""
    poly = _drop_collinear(list(poly))
    orient = 1 if signed_area(poly) > 0 else -1
    convex = reflex = 0
    k = len(poly)
    for i in range(k):
        (ax, ay), (bx, by), (cx, cy) = poly[i - 1], poly[i], poly[(i + 1) % k]
        cross = (bx - ax) * (cy - by) - (by - ay) * (cx - bx)
        if cross * orient > 0:
            convex += 1
        elif cross * orient < 0:
            reflex += 1
    return convex, reflex


def obstacle_components(table: WindTreeTable) -> list[list[Cell]]:
    """Blocked cells grouped into obstacles, each lifted to plane
    coordinates. Raises if an obstacle wraps around the torus or two
    obstacles touch (edge or corner contact under periodicity)."""
    L1, L2 = int(table.L1), int(table.L2)
    blocked = table.blocked
    lift: dict[Cell, Cell] = {}
    comps = []
    for cell in sorted(blocked):
        if cell in lift:
            continue
        comp = [cell]
        lift[cell] = cell
        stack = [cell]
        while stack:
            px, py = stack.pop()
            for ddx in (-1, 0, 1):
                for ddy in (-1, 0, 1):
                    if ddx == ddy == 0:
                        continue
                    qx, qy = px + ddx, py + ddy
                    base = (qx % L1, qy % L2)
                    if base not in blocked:
                        continue
                    if base in lift:
                        if lift[base] != (qx, qy):
                            raise ObstacleTouchesBoundary(
                                f"obstacle through {cell} touches its own periodic copy"
                            )
                        continue
                    lift[base] = (qx, qy)
                    comp.append((qx, qy))
                    stack.append((qx, qy))
        comps.append(comp)
    for comp in comps:
        cells = set(comp)
        # corner-only contact inside one 8-connected group means two obstacles touch
        for x, y in comp:
            for ddx, ddy in ((1, 1), (1, -1)):
                q = (x + ddx, y + ddy)
                if q in cells and (x + ddx, y) not in cells and (x, y + ddy) not in cells:
                    raise ObstacleTouchesBoundary(f"obstacles meet only at a corner near {(x, y)}")
    return comps


def table_polygons(table: WindTreeTable) -> list[list[Point]]:
    if table.polygons:
        return [list(p) for p in table.polygons]
    return [polygon_from_cells(c) for c in obstacle_components(table)]


# --------------------------------------------------------- family metadata


@dataclass(frozen=True)
class FamilyIndex:
    m: int

    @property
    def dimension(self) -> int:
        return family_dimension(self.m)


def _is_doubly_symmetric(poly: Sequence[Point]) -> bool:
    xs = [p[0] for p in poly]
    ys = [p[1] for p in poly]
    cx2 = min(xs) + max(xs)
    cy2 = min(ys) + max(ys)
    scale = max(max(xs) - min(xs), max(ys) - min(ys))

    def key(x: float, y: float) -> tuple[int, int]:
        # snap to a grid far finer than any feature but coarser than round-off
        return round(x / scale * 1e9), round(y / scale * 1e9)

    pts = {key(x, y) for x, y in poly}
    flip_x = {key(cx2 - x, y) for x, y in poly}
    flip_y = {key(x, cy2 - y) for x, y in poly}
    return flip_x == pts and flip_y == pts


def family_index(table: WindTreeTable) -> FamilyIndex:
    """``m`` from the corner census of the (single, doubly symmetric) obstacle."""
    polys = table_polygons(table)
    if len(polys) != 1:
        raise ValueError(f"family index needs exactly one obstacle, found {len(polys)}")
    poly = _drop_collinear(polys[0])
    if not _is_doubly_symmetric(poly):
        raise AsymmetricObstacle("obstacle is not symmetric under both axis reflections")
    convex, reflex = corner_census(poly)
    if convex % 4:
        raise CornerCountMismatch(f"{convex} convex corners is not a multiple of 4")
    m = convex // 4
    if reflex != 4 * (m - 1):
        raise CornerCountMismatch(f"{reflex} reflex corners, expected {4 * (m - 1)}")
    return FamilyIndex(m)


def family_dimension(m: int) -> int:
    """Real dimension of the family ``B(m)`` (direction not counted)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return 2 * m + 2


def stratum_dimension(profile: SingularityProfile) -> int:
    """Complex dimension ``2g + n - 2`` of a stratum of quadratic differentials."""
    if profile.kind != "quadratic":
        raise ValueError("stratum_dimension expects a quadratic profile")
    return 2 * profile.genus + len(profile) - 2


def hyperelliptic_profiles(m: int) -> tuple[SingularityProfile, SingularityProfile]:
    """``(Q(1^m, -1^(m+4)), Q(1^2m, -1^2m))`` for the family ``B(m)``."""
    base = SingularityProfile([1] * m + [-1] * (m + 4), "quadratic")
    cover = SingularityProfile([1] * (2 * m) + [-1] * (2 * m), "quadratic")
    return base, cover


# ---------------------------------------------------------------- unfolding


def _square_index(cells: list[Cell]) -> dict[tuple[int, int, int, int], int]:
    return {(x, y, ex, ey): 4 * k + 2 * ex + ey for k, (x, y) in enumerate(cells) for ex in (0, 1) for ey in (0, 1)}


def _check_free_connected(table: WindTreeTable, cells: list[Cell]) -> None:
    L1, L2 = int(table.L1), int(table.L2)
    free = set(cells)
    if not free:
        raise DisconnectedFreeRegion("no free cell")
    seen = {cells[0]}
    stack = [cells[0]]
    while stack:
        x, y = stack.pop()
        for q in (((x + 1) % L1, y), ((x - 1) % L1, y), (x, (y + 1) % L2), (x, (y - 1) % L2)):
            if q in free and q not in seen:
                seen.add(q)
                stack.append(q)
    if len(seen) != len(free):
        raise DisconnectedFreeRegion("free region of the table is not connected")


def _unfold(table: WindTreeTable) -> tuple[Origami, list[Cell]]:
    if table.polygons:
        table = rasterize(table)
    if not table.is_integer:
        raise ValueError("unfolding needs an integer table")
    obstacle_components(table)
    cells = table.free_cells
    _check_free_connected(table, cells)
    L1, L2 = int(table.L1), int(table.L2)
    idx = _square_index(cells)
    blocked = table.blocked
    n = 4 * len(cells)
    r = [0] * n
    u = [0] * n
    for (x, y, ex, ey), i in idx.items():
        sx = 1 - 2 * ex
        nx = (x + sx) % L1
        r[i] = idx[(x, y, 1 - ex, ey)] if (nx, y) in blocked else idx[(nx, y, ex, ey)]
        sy = 1 - 2 * ey
        ny = (y + sy) % L2
        u[i] = idx[(x, y, ex, 1 - ey)] if (x, ny) in blocked else idx[(x, ny, ex, ey)]
    return Origami(tuple(r), tuple(u)), cells


def unfold_to_origami(table: WindTreeTable) -> Origami:
    """Four reflected copies of the table glued along the obstacle walls,
    taken modulo the lattice.

    Square ``4k + 2ex + ey`` is free cell ``k`` (row-major) in the sheet
    reflected horizontally when ``ex = 1`` and vertically when ``ey = 1``.
    Moving right in the unfolded surface moves ``+x`` in sheet ``ex = 0`` and
    ``-x`` in sheet ``ex = 1``; a blocked neighbour flips ``ex`` in place.
    """
    o, _ = _unfold(table)
    if not is_connected(o):
        raise DisconnectedFreeRegion(
            "unfolded surface is disconnected (no wall mixes the sheets; is there an obstacle?)"
        )
    return o


def unfolded_square_labels(table: WindTreeTable) -> dict[int, tuple[int, int, int, int]]:
    """Square index -> ``(x, y, ex, ey)`` for :func:`unfold_to_origami`."""
    _, cells = _unfold(table)
    return {i: key for key, i in _square_index(cells).items()}


def unfold_diagonal_sublattice(table: WindTreeTable) -> Origami:
    """Unfold, then take the quotient by the sublattice spanned by
    ``(L1/2, L2/2)`` and ``(L1/2, -L2/2)`` instead of the full lattice.

    The blocked pattern must be invariant under the half-diagonal shift.
    The quotient is the unfolding over the full lattice divided by that
    shift, which acts on every sheet as a translation.
    """
    table = rasterize(table)
    if not table.is_integer:
        raise ValueError("unfolding needs an integer table")
    L1, L2 = int(table.L1), int(table.L2)
    if L1 % 2 or L2 % 2:
        raise PatternNotSublatticeInvariant("domain sides must be even")
    hx, hy = L1 // 2, L2 // 2
    shifted = {((x + hx) % L1, (y + hy) % L2) for x, y in table.blocked}
    if shifted != set(table.blocked):
        raise PatternNotSublatticeInvariant("blocked cells not invariant under the diagonal shift")
    o, cells = _unfold(table)
    idx = _square_index(cells)
    # a lattice vector acts identically on all four sheets
    sigma = [0] * o.n
    for (x, y, ex, ey), i in idx.items():
        sigma[i] = idx[((x + hx) % L1, (y + hy) % L2, ex, ey)]
    return quotient_by_translation_involution(o, sigma)


# --------------------------------------------------------------- symmetries


@dataclass
class WindTreeSymmetries:
    tau_h: Perm
    tau_v: Perm
    iota: Perm
    group_order: int
    axes: tuple[int, int] = field(default=(0, 0))


def _reflection_axes(blocked: frozenset[Cell], L: int, axis: int) -> list[int]:
    """Values ``a`` with the blocked set invariant under ``c -> a - c`` (mod L)
    along the given coordinate."""
    found = []
    for a in range(L):
        if axis == 0:
            img = {((a - x) % L, y) for x, y in blocked}
        else:
            img = {(x, (a - y) % L) for x, y in blocked}
        if img == set(blocked):
            found.append(a)
    return found


def reflection_translations(table: WindTreeTable) -> tuple[list[Perm], list[Perm]]:
    """Candidate ``tau_h`` and ``tau_v``: for each axis reflection of the
    table, the map sending sheet ``(ex, ey)`` to the mirrored cell in sheet
    ``(1-ex, ey)`` (resp. ``(ex, 1-ey)``)."""
    table = rasterize(table)
    o, cells = _unfold(table)
    idx = _square_index(cells)
    L1, L2 = int(table.L1), int(table.L2)
    taus_h, taus_v = [], []
    for a in _reflection_axes(table.blocked, L1, 0):
        taus_h.append(tuple(idx[((a - x) % L1, y, 1 - ex, ey)] for (x, y, ex, ey) in sorted(idx, key=idx.get)))
    for b in _reflection_axes(table.blocked, L2, 1):
        taus_v.append(tuple(idx[(x, (b - y) % L2, ex, 1 - ey)] for (x, y, ex, ey) in sorted(idx, key=idx.get)))
    return taus_h, taus_v


def _centre_axis(table: WindTreeTable, axis: int) -> int | None:
    """A reflection value ``a`` whose axis runs through the centre of an
    obstacle (the obstacle is mapped onto itself), else any symmetry axis."""
    L = int(table.L1 if axis == 0 else table.L2)
    candidates = _reflection_axes(table.blocked, L, axis)
    comps = obstacle_components(table)
    for a in candidates:
        for comp in comps:
            coords = {(c[axis]) % L for c in comp}
            if {(a - c) % L for c in coords} == coords:
                return a
    return candidates[0] if candidates else None


def windtree_symmetries(table: WindTreeTable) -> WindTreeSymmetries:
    """Locate ``tau_h``, ``tau_v`` (translations swapping sheets across a
    column/row) and an ``iota`` (rotation by pi) on the unfolded origami, and
    check that they generate a group containing ``(Z/2Z)^3``."""
    table = rasterize(table)
    o = unfold_to_origami(table)
    taus_h, taus_v = reflection_translations(table)
    if not taus_h or not taus_v:
        raise SymmetryNotFound("table has no horizontal/vertical reflection symmetry")
    L1, L2 = int(table.L1), int(table.L2)
    ah, av = _centre_axis(table, 0), _centre_axis(table, 1)
    tau_h = taus_h[_reflection_axes(table.blocked, L1, 0).index(ah)]
    tau_v = taus_v[_reflection_axes(table.blocked, L2, 1).index(av)]
    autos = set(translation_automorphisms(o))
    if tau_h not in autos or tau_v not in autos:
        raise SymmetryNotFound("sheet swaps do not commute with the gluings")
    ident = tuple(range(o.n))
    for t in (tau_h, tau_v):
        if perm_compose(t, t) != ident:
            raise SymmetryNotFound("sheet swap is not an involution")
    if perm_compose(tau_h, tau_v) != perm_compose(tau_v, tau_h):
        raise SymmetryNotFound("tau_h and tau_v do not commute")
    iota = None
    for s in antiautomorphisms(o):
        if perm_compose(s, s) == ident and perm_compose(s, tau_h) == perm_compose(tau_h, s) and perm_compose(
            s, tau_v
        ) == perm_compose(tau_v, s):
            iota = s
            break
    if iota is None:
        raise SymmetryNotFound("no involutive rotation commuting with tau_h, tau_v")
    # an isometry is a square permutation plus a holonomy sign: when r and u
    # are involutions a rotation can permute squares exactly like a translation
    group = group_closure([tau_h + (0,), tau_v + (0,), iota + (1,)], o.n, signed=True)
    if len(group) != 8:
        raise SymmetryNotFound(f"generated group has order {len(group)}, expected 8")
    return WindTreeSymmetries(tau_h, tau_v, iota, len(group), (ah, av))


def quotient_by_tau_v(table: WindTreeTable) -> Origami:
    """The translation surface ``X / tau_v``."""
    table = rasterize(table)
    o = unfold_to_origami(table)
    sym = windtree_symmetries(table)
    return quotient_by_translation_involution(o, sym.tau_v)
