"""SL(2,Z) orbits of origamis and the Lyapunov-exponent sum of the
arithmetic Teichmueller curve they span.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import kernels
from .errors import GenusPlusNotOne, OddRamification
from .exact import fraction_str
from .origami import (
    Origami,
    _require_connected,
    cycles_to_str,
    horizontal_cylinders,
    perm_compose,
    perm_inverse,
    singularity_profile,
)
from .profile import SingularityProfile

DEFAULT_ORBIT_BUDGET = 10**6
BUDGET_ENV = "WINDTREE_ORBIT_BUDGET"


def act_T(o: Origami) -> Origami:
    """Horizontal shear ``(r, u) -> (r, u r^-1)``."""
    return Origami(o.r, perm_compose(o.u, perm_inverse(o.r)))


def act_S(o: Origami) -> Origami:
    """Quarter turn ``(r, u) -> (u, r^-1)``."""
    return Origami(o.u, perm_inverse(o.r))


def canonical_form(o: Origami) -> Origami:
    _require_connected(o)
    r, u = kernels.canonical_pair(o.r, o.u)
    return Origami(r, u)


@dataclass
class OrbitData:
    representatives: list[Origami]
    cylinder_sums: list[Fraction]
    profile: SingularityProfile

    @property
    def size(self) -> int:
        return len(self.representatives)

    @property
    def n(self) -> int:
        return self.representatives[0].n

    def mean_cylinder_sum(self) -> Fraction:
        return sum(self.cylinder_sums, Fraction(0)) / self.size


def default_budget() -> int:
    value = os.environ.get(BUDGET_ENV)
    return int(value) if value else DEFAULT_ORBIT_BUDGET


def orbit(o: Origami, budget: int | None = None) -> OrbitData:
    """Breadth-first closure of ``o`` under ``T`` and ``S``, deduplicated by
    canonical form. Raises :class:`OrbitBudgetExceeded` instead of
    truncating."""
    from .errors import OrbitBudgetExceeded

    budget = default_budget() if budget is None else budget
    seed = canonical_form(o)
    profile = singularity_profile(seed)
    index = {(seed.r, seed.u): 0}
    reps = [seed]
    queue = deque([seed])
    while queue:
        cur = queue.popleft()
        for move in (act_T, act_S):
            img = move(cur)
            key = kernels.canonical_pair(img.r, img.u)
            if key not in index:
                if len(reps) >= budget:
                    raise OrbitBudgetExceeded(budget)
                index[key] = len(reps)
                nxt = Origami(*key)
                reps.append(nxt)
                queue.append(nxt)
    sums = [horizontal_cylinders(s).modulus_sum() for s in reps]
    return OrbitData(reps, sums, profile)


def kappa_abelian(profile: SingularityProfile) -> Fraction:
    """``(1/12) sum d(d+2)/(d+1)`` over the zeros of an Abelian profile."""
    return sum((Fraction(d * (d + 2), d + 1) for d in profile.orders), Fraction(0)) / 12


@dataclass(frozen=True)
class LyapunovSumReport:
    kappa_abelian: Fraction
    mean_cylinder_sum: Fraction
    total: Fraction
    size: int
    profile: SingularityProfile

    def to_json(self, representatives: Iterable[Origami] | None = None) -> dict:
        out = {
            "size": self.size,
            "profile": self.profile.label,
            "kappa": fraction_str(self.kappa_abelian),
            "mean_cyl_sum": fraction_str(self.mean_cylinder_sum),
            "total_num": self.total.numerator,
            "total_den": self.total.denominator,
        }
        if representatives is not None:
            out["representatives"] = [
                {"r": cycles_to_str(o.r), "u": cycles_to_str(o.u)} for o in representatives
            ]
        return out


def sum_lyapunov(data: OrbitData, profile: SingularityProfile | None = None) -> LyapunovSumReport:
    """``lambda_1 + ... + lambda_g`` for the Teichmueller curve of the orbit:
    ``kappa`` plus the orbit average of ``sum h/w`` over horizontal cylinders."""
    profile = profile or data.profile
    if profile.kind != "abelian":
        raise ValueError("sum_lyapunov needs an Abelian profile")
    kappa = kappa_abelian(profile)
    mean = data.mean_cylinder_sum()
    return LyapunovSumReport(kappa, mean, kappa + mean, data.size, profile)


def deficit(profile: SingularityProfile) -> Fraction:
    """``(sum lambda^-) - (sum lambda^+) = (1/4) sum_{d odd} 1/(d+2)``."""
    if profile.kind != "quadratic":
        raise ValueError("deficit needs a quadratic profile")
    return sum((Fraction(1, d + 2) for d in profile.orders if d % 2), Fraction(0)) / 4


def lambda_plus_from_cover(total: Fraction, profile: SingularityProfile) -> Fraction:
    """Top exponent of a genus-one quadratic locus from the exponent sum of
    its orienting double cover: ``(total - deficit) / 2``."""
    if profile.genus != 1:
        raise GenusPlusNotOne(f"{profile.label} has genus {profile.genus}, need 1")
    return (Fraction(total) - deficit(profile)) / 2


def orienting_cover_profile(profile: SingularityProfile) -> SingularityProfile:
    """Zeros of the canonical orienting double cover: odd ``d`` ramifies into
    one zero of order ``d+1``; even ``d`` splits into two zeros of order ``d/2``."""
    orders: list[int] = []
    for d in profile.orders:
        if d % 2:
            orders.append(d + 1)
        elif d > 0:
            orders.extend([d // 2, d // 2])
    return SingularityProfile(orders, "abelian")


def double_cover_profile(
    profile: SingularityProfile, ramified: Iterable[int]
) -> SingularityProfile:
    """Quadratic profile of a double cover branched at the listed positions
    (indices into ``profile.orders``): ramified ``d -> 2d+2``, others doubled."""
    ramified = sorted(set(ramified))
    if len(ramified) % 2:
        raise OddRamification(f"{len(ramified)} branch points; need an even number")
    orders: list[int] = []
    for k, d in enumerate(profile.orders):
        if k in ramified:
            orders.append(2 * d + 2)
        else:
            orders.extend([d, d])
    return SingularityProfile(orders, "quadratic")


def lyapunov_pipeline(o: Origami, quadratic: SingularityProfile, budget: int | None = None) -> dict:
    """Orbit, exponent sum and halving for an origami that is the orienting
    double cover of a genus-one quadratic differential."""
    data = orbit(o, budget)
    report = sum_lyapunov(data)
    expected = orienting_cover_profile(quadratic)
    out = {
        "profile": data.profile.label,
        "expected_profile": expected.label,
        "profile_ok": data.profile == expected,
        "orbit_size": data.size,
        "orbit_sum": report.total,
        "deficit": deficit(quadratic),
    }
    if out["profile_ok"]:
        out["lambda_plus"] = lambda_plus_from_cover(report.total, quadratic)
    return out
