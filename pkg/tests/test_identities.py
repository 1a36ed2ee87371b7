from __future__ import annotations

from fractions import Fraction
from math import comb

from hypothesis import given, settings
from hypothesis import strategies as st

from windtree.exact import double_factorial_ratio
from windtree.identities import (
    central_binomial_convolution,
    s1,
    s2,
    s3,
    s3_factorial,
    s3_plain_recurrence_residual,
    s3_recurrence_check,
    s3_recurrence_residual,
    verify_identities,
)


def brute_sum(m: int, a_shift: int, b_top: int) -> Fraction:
    """Direct sum with the binomial taken as 0 outside ``0 <= k <= n``."""

    def c(n: int, k: int) -> int:
        return comb(n, k) if 0 <= k <= n else 0

    return sum((Fraction(c(m, k) * c(m + b_top, k + a_shift), comb(2 * m, 2 * k)) for k in range(m + 1)), Fraction(0))


def test_small_values():
    assert s1(2) == Fraction(8, 3) == double_factorial_ratio(4, 3)
    assert s2(1) == 1
    assert s3(1) == 3
    assert s3(0) == 1
    assert s3(2) == 5
    assert central_binomial_convolution(2) == 16


@settings(max_examples=200)
@given(st.integers(0, 60))
def test_sums_match_a_direct_oracle(m):
    assert s1(m) == brute_sum(m, 0, 0)
    assert s2(m) == brute_sum(m, 1, 0)
    assert s3(m) == brute_sum(m, 1, 1)


def test_all_identities_hold_to_200():
    rep = verify_identities(200)
    assert rep.ok, rep.first_failure
    assert all(ok for _, ok in rep.rows())
    assert len(rep.rows()) == 7


def test_recurrence_holds_for_the_factorial_form():
    assert s3_recurrence_check(200).ok
    for m in range(30):
        assert s3_factorial(m) == comb(2 * m + 1, m)
        assert s3_recurrence_residual(m) == 0


def test_recurrence_on_the_plain_sum_is_not_zero():
    assert s3_plain_recurrence_residual(0) == 0
    assert s3_plain_recurrence_residual(1) == 3 * 5 - 10 * 3 == -15


def test_negative_bound_rejected():
    import pytest

    with pytest.raises(ValueError):
        verify_identities(-1)
