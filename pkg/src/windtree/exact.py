"""Exact arithmetic helpers: double factorials, binomials, and the
diffusion-rate closed form.

Rationals are :class:`fractions.Fraction` throughout; :class:`SVValue` wraps
one to stand for ``q / pi**2`` without ever touching floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import NamedTuple, Union

import mpmath

Rational = Fraction
_Scalar = Union[int, Fraction]

ASYMPTOTIC_DIGITS = 50


def double_factorial(n: int) -> int:
    """Product of the positive integers up to ``n`` sharing its parity.

    ``0!! = 1``. Negative arguments are refused here; the ``(-1)!! = 1``
    convention is only available through :func:`double_factorial_ratio`.
    """
    if n < 0:
        raise ValueError(f"double factorial of negative number {n}")
    return prod(range(n, 0, -2))


def double_factorial_ratio(a: int, b: int) -> Fraction:
    """``a!! / b!!`` with ``(-1)!!`` read as 1."""

    def df(k: int) -> int:
        return 1 if k == -1 else double_factorial(k)

    return Fraction(df(a), df(b))


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binomial with negative n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def delta_closed_form(m: int) -> Fraction:
    """Diffusion rate ``(2m)!! / (2m+1)!!`` of the family with ``4m`` corners."""
    if m < 1:
        raise ValueError(f"obstacle family index must be >= 1, got {m}")
    return double_factorial_ratio(2 * m, 2 * m + 1)


class AsymptoticComparison(NamedTuple):
    m: int
    delta: Fraction
    leading_term: mpmath.mpf
    relative_deviation: mpmath.mpf


def delta_asymptotic(m: int, digits: int = ASYMPTOTIC_DIGITS) -> AsymptoticComparison:
    """Compare ``delta(m)`` with ``sqrt(pi) / (2 sqrt(m))``.

    The exact rational is converted once at ``digits`` significant digits;
    the square roots come from mpmath at the same working precision.
    """
    delta = delta_closed_form(m)
    with mpmath.workdps(digits):
        lead = mpmath.sqrt(mpmath.pi) / (2 * mpmath.sqrt(m))
        exact = mpmath.mpf(delta.numerator) / delta.denominator
        dev = abs(exact / lead - 1)
        return AsymptoticComparison(m, delta, +lead, +dev)


@dataclass(frozen=True)
class SVValue:
    """A Siegel-Veech constant ``pi2_coeff / pi**2``."""

    pi2_coeff: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "pi2_coeff", Fraction(self.pi2_coeff))

    @classmethod
    def zero(cls) -> SVValue:
        return cls(Fraction(0))

    def __add__(self, other: SVValue) -> SVValue:
        if not isinstance(other, SVValue):
            return NotImplemented
        return SVValue(self.pi2_coeff + other.pi2_coeff)

    def __sub__(self, other: SVValue) -> SVValue:
        if not isinstance(other, SVValue):
            return NotImplemented
        return SVValue(self.pi2_coeff - other.pi2_coeff)

    def __neg__(self) -> SVValue:
        return SVValue(-self.pi2_coeff)

    def __mul__(self, k: _Scalar) -> SVValue:
        if isinstance(k, (int, Fraction)):
            return SVValue(self.pi2_coeff * k)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, k: _Scalar) -> SVValue:
        if isinstance(k, (int, Fraction)):
            return SVValue(self.pi2_coeff / k)
        return NotImplemented

    def times_pi2_over_3(self) -> Fraction:
        """The rational ``(pi**2 / 3) * self``."""
        return self.pi2_coeff / 3

    def __str__(self) -> str:
        return f"({self.pi2_coeff})/pi^2"


def fraction_str(q: Fraction) -> str:
    """Serialize as ``"num/den"`` (or ``"num"`` when integral)."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
