"""Square-tiled surfaces encoded by a pair of permutations.

Squares are numbered ``0..n-1`` internally; text input and output use the
1-based disjoint-cycle notation, e.g. ``r=(1,2,3)(4,5)``. ``r[i]`` is the
square glued to the right of ``i`` and ``u[i]`` the square glued on top.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    DisconnectedOrigami,
    MalformedPermutation,
    NotAutomorphism,
    NotFixedPointFree,
    SizeMismatch,
)
from .profile import SingularityProfile

Perm = tuple[int, ...]
PermInput = Union[str, Sequence[int]]

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


# --------------------------------------------------------------------------
# permutation helpers (0-based tuples)


def perm_inverse(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def perm_compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """``p o q``: apply ``q`` first, then ``p``."""
    return tuple(p[q[i]] for i in range(len(q)))


def perm_cycles(p: Sequence[int], singletons: bool = False) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    cycles = []
    for s in range(len(p)):
        if seen[s]:
            continue
        cyc = []
        i = s
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        if singletons or len(cyc) > 1:
            cycles.append(tuple(cyc))
    return cycles


def cycles_to_str(p: Sequence[int]) -> str:
    cycles = perm_cycles(p)
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(i + 1) for i in c) + ")" for c in cycles)


def parse_permutation(spec: PermInput, n: int | None = None) -> Perm:
    """Parse a permutation on ``{1..n}`` into a 0-based tuple.

    ``spec`` is either disjoint-cycle text (fixed points may be omitted) or a
    one-line sequence of 1-based images. With cycle text and no ``n`` the
    size is the largest symbol that appears.
    """
    if isinstance(spec, str):
        text = spec.strip()
        if text.startswith("[") or (text and "(" not in text):
            items = [int(t) for t in re.split(r"[\s,\[\]]+", text) if t]
            return parse_permutation(items, n)
        cycles = []
        leftover = _CYCLE_RE.sub("", text).strip()
        if leftover:
            raise MalformedPermutation(f"unexpected text {leftover!r} in {spec!r}")
        for body in _CYCLE_RE.findall(text):
            items = [t for t in re.split(r"[\s,]+", body.strip()) if t]
            try:
                cycles.append([int(t) for t in items])
            except ValueError as exc:
                raise MalformedPermutation(f"non-integer symbol in {spec!r}") from exc
        size = n if n is not None else max((max(c) for c in cycles if c), default=0)
        image = list(range(size))
        seen: set[int] = set()
        for cyc in cycles:
            for s in cyc:
                if s < 1 or s > size:
                    if n is not None:
                        raise SizeMismatch(f"symbol {s} outside 1..{size}")
                    raise MalformedPermutation(f"symbol {s} outside 1..{size}")
                if s in seen:
                    raise MalformedPermutation(f"symbol {s} repeated in {spec!r}")
                seen.add(s)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                image[a - 1] = b - 1
        return tuple(image)
    items = [int(t) for t in spec]
    if n is not None and len(items) != n:
        raise SizeMismatch(f"one-line permutation has {len(items)} entries, expected {n}")
    size = len(items)
    if sorted(items) != list(range(1, size + 1)):
        raise MalformedPermutation(f"{items} is not a permutation of 1..{size}")
    return tuple(i - 1 for i in items)


# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CylinderDecomposition:
    """Horizontal cylinders as ``(width, height)`` pairs."""

    cylinders: tuple[tuple[int, int], ...]

    @property
    def area(self) -> int:
        return sum(w * h for w, h in self.cylinders)

    def modulus_sum(self) -> Fraction:
        """``sum(height / width)`` over the cylinders."""
        return sum((Fraction(h, w) for w, h in self.cylinders), Fraction(0))

    def __iter__(self):
        return iter(self.cylinders)

    def __len__(self) -> int:
        return len(self.cylinders)


@dataclass(frozen=True)
class Origami:
    r: Perm
    u: Perm
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", tuple(self.r))
        object.__setattr__(self, "u", tuple(self.u))
        n = len(self.r)
        if n == 0:
            raise SizeMismatch("an origami needs at least one square")
        if len(self.u) != n:
            raise SizeMismatch(f"r has {n} symbols but u has {len(self.u)}")
        for name, p in (("r", self.r), ("u", self.u)):
            if sorted(p) != list(range(n)):
                raise MalformedPermutation(f"{name} is not a permutation of {n} symbols")

    @property
    def n(self) -> int:
        return len(self.r)

    @classmethod
    def from_cycles(cls, r: PermInput, u: PermInput, n: int | None = None) -> Origami:
        if n is None:
            rp = parse_permutation(r)
            up = parse_permutation(u)
            n = max(len(rp), len(up))
        return cls(parse_permutation(r, n), parse_permutation(u, n))

    @classmethod
    def parse(cls, text: str) -> Origami:
        """Read the text format: ``n`` on the first line, then ``r=`` and ``u=``."""
        n = None
        fields: dict[str, str] = {}
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" in line:
                key, _, value = line.partition("=")
                fields[key.strip().lower()] = value.strip()
            elif n is None:
                n = int(line)
            else:
                raise MalformedPermutation(f"unexpected line {raw!r}")
        if "r" not in fields or "u" not in fields:
            raise MalformedPermutation("origami text needs both r= and u= lines")
        return validate(n, fields["r"], fields["u"])

    def to_text(self) -> str:
        return f"{self.n}\nr={cycles_to_str(self.r)}\nu={cycles_to_str(self.u)}\n"

    def relabel(self, pi: Sequence[int]) -> Origami:
        """The pair ``(pi r pi^-1, pi u pi^-1)``."""
        inv = perm_inverse(pi)
        r = tuple(pi[self.r[inv[k]]] for k in range(self.n))
        u = tuple(pi[self.u[inv[k]]] for k in range(self.n))
        return Origami(r, u)

    def __str__(self) -> str:
        return f"Origami(r={cycles_to_str(self.r)}, u={cycles_to_str(self.u)})"


def validate(n: int | None, r: PermInput, u: PermInput) -> Origami:
    """Checked construction from cycle text or one-line arrays."""
    if n is not None and n < 1:
        raise SizeMismatch(f"n must be positive, got {n}")
    return Origami.from_cycles(r, u, n)


def torus() -> Origami:
    return Origami((0,), (0,))


def is_connected(o: Origami) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in (o.r[i], o.u[i]):
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == o.n


def _require_connected(o: Origami) -> None:
    if not is_connected(o):
        raise DisconnectedOrigami(f"{o} is not connected")


def commutator(o: Origami) -> Perm:
    """``r u r^-1 u^-1`` (rightmost applied first); its cycles are the corners."""
    key = "commutator"
    if key not in o._cache:
        ri, ui = perm_inverse(o.r), perm_inverse(o.u)
        o._cache[key] = tuple(o.r[o.u[ri[ui[i]]]] for i in range(o.n))
    return o._cache[key]


def singularity_profile(o: Origami) -> SingularityProfile:
    """Cone points: a commutator cycle of length ``l`` is a zero of order ``l-1``."""
    _require_connected(o)
    c = commutator(o)
    return SingularityProfile([len(cyc) - 1 for cyc in perm_cycles(c, singletons=True)])


def genus(o: Origami) -> int:
    return singularity_profile(o).genus


def horizontal_cylinders(o: Origami) -> CylinderDecomposition:
    """Maximal horizontal cylinders.

    Each cycle of ``r`` is a row (level). A level stacks onto the level
    above it when every corner along its top edge is regular, i.e.
    ``u(r(i)) == r(u(i))`` for all ``i`` in the row.
    """
    key = "cylinders"
    if key in o._cache:
        return o._cache[key]
    r, u = o.r, o.u
    rows = perm_cycles(r, singletons=True)
    row_of = [0] * o.n
    for k, row in enumerate(rows):
        for i in row:
            row_of[i] = k
    above: list[int | None] = []
    for row in rows:
        if all(u[r[i]] == r[u[i]] for i in row):
            above.append(row_of[u[row[0]]])
        else:
            above.append(None)
    has_below = [False] * len(rows)
    for nxt in above:
        if nxt is not None:
            has_below[nxt] = True
    done = [False] * len(rows)
    cylinders = []
    # chains start at rows with a singular bottom edge
    for k in range(len(rows)):
        if has_below[k]:
            continue
        height = 0
        j: int | None = k
        while j is not None and not done[j]:
            done[j] = True
            height += 1
            j = above[j]
        cylinders.append((len(rows[k]), height))
    # whatever is left closes up into a cycle of rows (a flat torus)
    for k in range(len(rows)):
        if done[k]:
            continue
        height = 0
        j = k
        while not done[j]:
            done[j] = True
            height += 1
            j = above[j]
        cylinders.append((len(rows[k]), height))
    result = CylinderDecomposition(tuple(sorted(cylinders)))
    o._cache[key] = result
    return result


def _propagate(o: Origami, start_image: int, target_r: Perm, target_u: Perm) -> Perm | None:
    """The map ``sigma`` with ``sigma(0) = start_image`` and
    ``sigma r = target_r sigma``, ``sigma u = target_u sigma``, if it exists."""
    n = o.n
    sigma = [-1] * n
    sigma[0] = start_image
    stack = [0]
    while stack:
        i = stack.pop()
        for p, q in ((o.r, target_r), (o.u, target_u)):
            j, img = p[i], q[sigma[i]]
            if sigma[j] < 0:
                sigma[j] = img
                stack.append(j)
            elif sigma[j] != img:
                return None
    if sorted(sigma) != list(range(n)):
        return None
    return tuple(sigma)


def translation_automorphisms(o: Origami) -> list[Perm]:
    """All ``sigma`` commuting with both ``r`` and ``u``."""
    _require_connected(o)
    found = []
    for j in range(o.n):
        s = _propagate(o, j, o.r, o.u)
        if s is not None:
            found.append(s)
    return found


def antiautomorphisms(o: Origami) -> list[Perm]:
    """All ``sigma`` with ``sigma r sigma^-1 = r^-1`` and ``sigma u sigma^-1 = u^-1``
    (the rotations by pi)."""
    _require_connected(o)
    ri, ui = perm_inverse(o.r), perm_inverse(o.u)
    found = []
    for j in range(o.n):
        s = _propagate(o, j, ri, ui)
        if s is not None:
            found.append(s)
    return found


def is_translation_automorphism(o: Origami, sigma: Sequence[int]) -> bool:
    return (
        len(sigma) == o.n
        and sorted(sigma) == list(range(o.n))
        and all(sigma[o.r[i]] == o.r[sigma[i]] and sigma[o.u[i]] == o.u[sigma[i]] for i in range(o.n))
    )


def quotient_by_translation_involution(o: Origami, sigma: Sequence[int]) -> Origami:
    """Quotient by a fixed-point-free translation involution.

    Squares of the quotient are the ``sigma``-orbits, numbered by the
    order of their smallest member.
    """
    sigma = tuple(sigma)
    if not is_translation_automorphism(o, sigma):
        raise NotAutomorphism("sigma does not commute with r and u")
    if any(sigma[i] == i or sigma[sigma[i]] != i for i in range(o.n)):
        raise NotFixedPointFree("sigma must be an involution without fixed points")
    reps = sorted(i for i in range(o.n) if i < sigma[i])
    index = {}
    for k, i in enumerate(reps):
        index[i] = k
        index[sigma[i]] = k
    r = tuple(index[o.r[i]] for i in reps)
    u = tuple(index[o.u[i]] for i in reps)
    return Origami(r, u)


def group_closure(gens: Iterable[Sequence[int]], n: int, signed: bool = False) -> set[Perm]:
    """The finite permutation group generated by ``gens``.

    With ``signed`` each generator carries one extra trailing entry, a
    Z/2 holonomy bit (0 translation, 1 rotation by pi) composed additively.
    """
    ident = tuple(range(n)) + ((0,) if signed else ())
    group = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = perm_compose(h[:n], g[:n])
                if signed:
                    gh = gh + ((h[n] + g[n]) % 2,)
                if gh not in group:
                    group.add(gh)
                    nxt.append(gh)
        frontier = nxt
    return group
