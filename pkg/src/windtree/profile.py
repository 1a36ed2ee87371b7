"""Singularity profiles of Abelian and quadratic differentials."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Literal

from .errors import NonIntegralGenus

Kind = Literal["abelian", "quadratic"]


@dataclass(frozen=True)
class SingularityProfile:
    """Sorted multiset of zero/pole orders.

    Order 0 (a marked regular point) is only kept when ``marked_points`` is
    set; otherwise it is dropped on construction.
    """

    orders: tuple[int, ...]
    kind: Kind = "abelian"
    marked_points: bool = False

    def __init__(
        self, orders: Iterable[int], kind: Kind = "abelian", marked_points: bool = False
    ) -> None:
        orders = [int(d) for d in orders]
        if kind not in ("abelian", "quadratic"):
            raise ValueError(f"unknown profile kind {kind!r}")
        lowest = 0 if kind == "abelian" else -1
        for d in orders:
            if d < lowest:
                raise ValueError(f"order {d} not allowed in a {kind} profile")
        if not marked_points:
            orders = [d for d in orders if d != 0]
        object.__setattr__(self, "orders", tuple(sorted(orders, reverse=True)))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "marked_points", marked_points)

    @classmethod
    def parse(cls, text: str) -> SingularityProfile:
        """Read ``H(2^4)``, ``Q(1^6,-1^6)``, ``Q(1,-1^5)``, ``H()`` style labels."""
        text = text.strip().replace(" ", "")
        head, _, rest = text.partition("(")
        kind: Kind = {"H": "abelian", "Q": "quadratic"}[head.upper()]
        body = rest.rstrip(")")
        orders: list[int] = []
        for item in filter(None, body.split(",")):
            base, _, mult = item.partition("^")
            orders.extend([int(base)] * (int(mult) if mult else 1))
        return cls(orders, kind)

    def __len__(self) -> int:
        return len(self.orders)

    @property
    def total(self) -> int:
        return sum(self.orders)

    @property
    def genus(self) -> int:
        return genus(self)

    @property
    def label(self) -> str:
        letter = "H" if self.kind == "abelian" else "Q"
        parts = []
        for d, k in sorted(Counter(self.orders).items(), reverse=True):
            parts.append(str(d) if k == 1 else f"{d}^{k}")
        return f"{letter}({','.join(parts)})"

    def __str__(self) -> str:
        return self.label


def genus(profile: SingularityProfile, kind: Kind | None = None) -> int:
    """Genus from the order sum: ``2g-2`` (Abelian) or ``4g-4`` (quadratic)."""
    kind = kind or profile.kind
    step = 2 if kind == "abelian" else 4
    shifted = profile.total + step
    if shifted % step or shifted < 0:
        raise NonIntegralGenus(f"{profile.orders} has no integral {kind} genus")
    return shifted // step
