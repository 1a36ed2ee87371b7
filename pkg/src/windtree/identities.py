"""Binomial-ratio sums behind the closed form, checked exactly."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from math import comb, factorial

from .exact import binomial, double_factorial_ratio


@lru_cache(maxsize=None)
def s1(m: int) -> Fraction:
    return sum((Fraction(binomial(m, k) ** 2, binomial(2 * m, 2 * k)) for k in range(m + 1)), Fraction(0))


@lru_cache(maxsize=None)
def s2(m: int) -> Fraction:
    return sum(
        (Fraction(binomial(m, k) * binomial(m, k + 1), binomial(2 * m, 2 * k)) for k in range(m + 1)),
        Fraction(0),
    )


@lru_cache(maxsize=None)
def s3(m: int) -> Fraction:
    return sum(
        (Fraction(binomial(m, k) * binomial(m + 1, k + 1), binomial(2 * m, 2 * k)) for k in range(m + 1)),
        Fraction(0),
    )


@lru_cache(maxsize=None)
def s3_factorial(m: int) -> int:
    """``s3`` with the common factor ``m!(m+1)!/(2m)!`` cleared:
    ``sum (2k)!/(k!(k+1)!) * (2m-2k)!/((m-k)!)^2``. Equals ``C(2m+1, m)``."""
    total = 0
    for k in range(m + 1):
        catalan_like = factorial(2 * k) // (factorial(k) * factorial(k + 1))
        central = comb(2 * (m - k), m - k)
        total += catalan_like * central
    return total


def central_binomial_convolution(m: int) -> int:
    """``sum_j C(2j, j) C(2m-2j, m-j)``, which equals ``4^m``."""
    return sum(comb(2 * j, j) * comb(2 * m - 2 * j, m - j) for j in range(m + 1))


@dataclass
class IdentityReport:
    max_m: int
    checks: dict[str, bool] = field(default_factory=dict)
    first_failure: tuple[str, int] | None = None

    @property
    def ok(self) -> bool:
        return self.first_failure is None

    def rows(self) -> list[tuple[str, bool]]:
        return list(self.checks.items())


def _run(report: IdentityReport, name: str, predicate, ms) -> None:
    ok = True
    for m in ms:
        if not predicate(m):
            ok = False
            if report.first_failure is None:
                report.first_failure = (name, m)
            break
    report.checks[name] = ok


def verify_identities(max_m: int) -> IdentityReport:
    """Check the three sums, the Pascal split ``s3 = s1 + s2``, and the
    central-binomial convolution for ``0 <= m <= max_m``."""
    if max_m < 0:
        raise ValueError("max_m must be >= 0")
    report = IdentityReport(max_m)
    ms = range(max_m + 1)
    _run(report, "s1 = (2m)!!/(2m-1)!!", lambda m: s1(m) == double_factorial_ratio(2 * m, 2 * m - 1), ms)
    _run(
        report,
        "s1 = 4^m (m!)^2/(2m)!",
        lambda m: s1(m) == Fraction(4**m * factorial(m) ** 2, factorial(2 * m)),
        ms,
    )
    _run(
        report,
        "s2 = 2m+1 - (2m)!!/(2m-1)!!",
        lambda m: s2(m) == 2 * m + 1 - double_factorial_ratio(2 * m, 2 * m - 1),
        ms,
    )
    _run(report, "s3 = 2m+1", lambda m: s3(m) == 2 * m + 1, ms)
    _run(report, "s3 = s1 + s2", lambda m: s3(m) == s1(m) + s2(m), ms)
    _run(report, "sum C(2j,j)C(2m-2j,m-j) = 4^m", lambda m: central_binomial_convolution(m) == 4**m, ms)
    _run(report, "s3 factorial form = C(2m+1,m)", lambda m: s3_factorial(m) == comb(2 * m + 1, m), ms)
    return report


def s3_recurrence_residual(m: int) -> int:
    """``(m+2) s(m+1) - 2(2m+3) s(m)`` for the factorial form of ``s3``."""
    return (m + 2) * s3_factorial(m + 1) - 2 * (2 * m + 3) * s3_factorial(m)


def s3_plain_recurrence_residual(m: int) -> Fraction:
    """The same recurrence applied to the binomial-ratio ``s3`` (which is
    ``2m+1``); it does not vanish, e.g. ``-15`` at ``m = 1``."""
    return (m + 2) * s3(m + 1) - 2 * (2 * m + 3) * s3(m)


def s3_recurrence_check(max_m: int) -> IdentityReport:
    report = IdentityReport(max_m)
    _run(report, "(m+2)s3(m+1) - 2(2m+3)s3(m) = 0", lambda m: s3_recurrence_residual(m) == 0, range(max_m + 1))
    return report
