"""Siegel-Veech constants of genus-zero strata and the double-cover
calculus giving the top Lyapunov exponent of the hyperelliptic loci.

Every constant here is a rational multiple of ``1/pi^2`` and is carried as
an :class:`~windtree.exact.SVValue`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable, Literal

from .errors import DomainViolation, GenusNotZero
from .exact import SVValue, binomial, delta_closed_form, fraction_str
from .profile import SingularityProfile


def kappa(profile: SingularityProfile) -> Fraction:
    """``(1/24) sum d(d+4)/(d+2)`` over all zeros and poles."""
    total = Fraction(0)
    for d in profile.orders:
        if d == -2:
            raise DomainViolation("order -2 is not allowed")
        total += Fraction(d * (d + 4), d + 2)
    return total / 24


def c_area_genus0(profile: SingularityProfile) -> SVValue:
    """Genus-zero strata have vanishing exponent sum, so ``c_area = -3 kappa``."""
    if profile.kind != "quadratic" or profile.genus != 0:
        raise GenusNotZero(f"{profile.label} is not a genus-zero quadratic stratum")
    return SVValue(-3 * kappa(profile))


def c_pocket_detailed(d_i: int, k: int) -> SVValue:
    """Pocket bounded by a fixed pole pair and a loop from a fixed zero of order ``d_i``."""
    if k <= 4:
        raise DomainViolation(f"pocket constant needs k >= 5, got {k}")
    if d_i < 1:
        raise DomainViolation(f"boundary zero must have order >= 1, got {d_i}")
    return SVValue(Fraction(d_i + 1, 2 * (k - 4)))


def c_pocket(k: int) -> SVValue:
    """Pocket for a fixed pole pair, summed over the boundary zero: ``1/(2 pi^2)``."""
    if k <= 4:
        raise DomainViolation(f"pocket constant needs k >= 5, got {k}")
    return SVValue(Fraction(1, 2))


def c_dumbbell(d_i: int, d_j: int, k1: int, k2: int, k: int) -> SVValue:
    """Cylinder separating the sphere into parts with ``k1`` and ``k2``
    singularities, bounded by loops from zeros of orders ``d_i`` and ``d_j``."""
    if k1 < 3 or k2 < 3:
        raise DomainViolation(f"dumbbell parts need >= 3 singularities, got {k1}, {k2}")
    if k1 + k2 != k:
        raise DomainViolation(f"k1 + k2 = {k1 + k2} != k = {k}")
    if d_i < 1 or d_j < 1:
        raise DomainViolation("dumbbell boundary zeros must have order >= 1")
    coeff = Fraction((d_i + 1) * (d_j + 1), 2) * Fraction(
        factorial(k1 - 3) * factorial(k2 - 3), factorial(k - 4)
    )
    return SVValue(coeff)


def compose_c_area(constants: Iterable[SVValue], k: int) -> SVValue:
    """``c_area = (1/(k-3)) sum c_C`` over single-cylinder configurations."""
    if k < 4:
        raise DomainViolation(f"need k >= 4, got {k}")
    total = SVValue.zero()
    for c in constants:
        total = total + c
    return total / (k - 3)


@dataclass(frozen=True)
class ConfigurationCount:
    kind: Literal["pocket", "dumbbell"]
    params: tuple[int, ...]
    multiplicity: int
    constant: SVValue
    monodromy_factor: Fraction = Fraction(1)

    @property
    def weighted(self) -> SVValue:
        """Total contribution ``multiplicity * monodromy_factor * constant``."""
        return self.constant * (self.multiplicity * self.monodromy_factor)


def configurations(profile: SingularityProfile) -> list[ConfigurationCount]:
    """All cylinder configurations of a genus-zero stratum with named
    singularities, by brute-force enumeration.

    Pockets: one per unordered pair of poles (aggregate constant).
    Dumbbells: one per split of the singularities into two parts whose
    orders each sum to -2, times a choice of boundary zero on each side.
    """
    if profile.kind != "quadratic" or profile.genus != 0:
        raise GenusNotZero(f"{profile.label} is not a genus-zero quadratic stratum")
    orders = list(profile.orders)
    k = len(orders)
    poles = [i for i, d in enumerate(orders) if d == -1]
    out: list[ConfigurationCount] = []
    n_pairs = len(poles) * (len(poles) - 1) // 2
    if n_pairs:
        out.append(ConfigurationCount("pocket", (), n_pairs, c_pocket(k)))
    # unordered splits: singularity 0 always lands in part A
    for size_a in range(1, k):
        for rest in combinations(range(1, k), size_a - 1):
            part_a = (0,) + rest
            part_b = tuple(i for i in range(k) if i not in part_a)
            if sum(orders[i] for i in part_a) != -2 or sum(orders[i] for i in part_b) != -2:
                continue
            for i in part_a:
                for j in part_b:
                    if orders[i] < 1 or orders[j] < 1:
                        continue
                    params = (orders[i], orders[j], len(part_a), len(part_b), k)
                    out.append(ConfigurationCount("dumbbell", params, 1, c_dumbbell(*params)))
    return out


def c_area_from_configurations(profile: SingularityProfile) -> SVValue:
    k = len(profile)
    return compose_c_area((c.weighted for c in configurations(profile)), k)


def delta_kappa(ramified_orders: Iterable[int]) -> Fraction:
    """``kappa(cover) - 2 kappa(base) = (1/4) sum 1/(d+2)`` over branch points."""
    total = Fraction(0)
    for d in ramified_orders:
        if d < -1:
            raise DomainViolation(f"order {d} below -1")
        total += Fraction(1, d + 2)
    return total / 4


def monodromy_weight(kind: Literal["trivial", "nontrivial"]) -> Fraction:
    """Multiplier of ``c`` in ``c~ - 2c`` for one configuration.

    Nontrivial monodromy lifts to a single cylinder twice as wide
    (``c~ = c/2``, weight ``-3/2``); trivial monodromy lifts to two copies
    (``c~ = 2c``, weight 0).
    """
    if kind == "nontrivial":
        return Fraction(1, 2) - 2
    if kind == "trivial":
        return Fraction(2) - 2
    raise ValueError(f"unknown monodromy kind {kind!r}")


def pocket_monodromy(ramified_poles_in_pair: int) -> Literal["trivial", "nontrivial"]:
    """Holonomy around a pocket is nontrivial iff exactly one of its two poles is a branch point."""
    return "nontrivial" if ramified_poles_in_pair % 2 else "trivial"


def dumbbell_monodromy(ramified_on_one_side: int) -> Literal["trivial", "nontrivial"]:
    """Nontrivial iff each side of the dumbbell holds an odd number of branch points."""
    return "nontrivial" if ramified_on_one_side % 2 else "trivial"


@dataclass
class PipelineReport:
    m: int
    pocket_term: Fraction
    dumbbell_term: Fraction
    identity_term: Fraction
    delta_kappa: Fraction
    lambda_plus: Fraction
    dumbbell_counts: list[tuple[int, int]] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return (
            self.pocket_term + self.dumbbell_term == self.identity_term
            and self.lambda_plus == delta_closed_form(self.m)
        )

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "pocket_term": fraction_str(self.pocket_term),
            "dumbbell_term": fraction_str(self.dumbbell_term),
            "c_area_term": fraction_str(self.pocket_term + self.dumbbell_term),
            "identity_term": fraction_str(self.identity_term),
            "delta_kappa": fraction_str(self.delta_kappa),
            "lambda_plus": fraction_str(self.lambda_plus),
            "closed_form": fraction_str(delta_closed_form(self.m)),
            "consistent": self.consistent,
        }


def dumbbell_census(m: int, m1: int) -> int:
    """Dumbbells of ``Q(1^m, -1^(m+4))`` with nontrivial monodromy and ``m1``
    zeros on the side holding one branch pole: split the zeros, put one of
    the 4 branch poles on that side with ``m1 - 1`` of the ``m`` others, and
    pick a boundary zero on each side."""
    return binomial(m, m1) * binomial(4, 1) * binomial(m, m1 - 1) * m1 * (m - m1)


def lambda_plus_pipeline(m: int) -> PipelineReport:
    """``lambda_1^+`` of ``Q^hyp(1^2m, -1^2m)`` over ``Q(1^m, -1^(m+4))``,
    assembled from pocket and dumbbell Siegel-Veech constants."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    from .identities import s2

    k = 2 * m + 4
    w = monodromy_weight("nontrivial")
    # pockets: one branch pole (4 choices) with one plain pole (m choices)
    pocket_delta = compose_c_area([c_pocket(k) * (4 * m) * w], k)
    pocket_term = pocket_delta.times_pi2_over_3()

    dumbbells = []
    counts = []
    for m1 in range(1, m):
        count = dumbbell_census(m, m1)
        k1 = m1 + (m1 + 2)
        k2 = (m - m1) + (m - m1 + 2)
        dumbbells.append(c_dumbbell(1, 1, k1, k2, k) * count * w)
        counts.append((m1, count))
    dumbbell_delta = compose_c_area(dumbbells, k)
    dumbbell_term = dumbbell_delta.times_pi2_over_3()

    identity_term = -s2(m) / (2 * m + 1)
    dk = delta_kappa([-1] * 4)
    lam = dk + pocket_term + dumbbell_term
    return PipelineReport(m, pocket_term, dumbbell_term, identity_term, dk, lam, counts)
