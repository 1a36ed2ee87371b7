from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import MANY, origamis, permutations_of
from windtree.errors import GenusPlusNotOne, OddRamification, OrbitBudgetExceeded
from windtree.origami import Origami, horizontal_cylinders, is_connected, singularity_profile, torus
from windtree.profile import SingularityProfile
from windtree.table import WindTreeTable, classical_integer_table, quotient_by_tau_v, unfold_to_origami
from windtree.teichcurve import (
    BUDGET_ENV,
    act_S,
    act_T,
    canonical_form,
    default_budget,
    deficit,
    double_cover_profile,
    kappa_abelian,
    lambda_plus_from_cover,
    lyapunov_pipeline,
    orbit,
    orienting_cover_profile,
    sum_lyapunov,
)

H2 = Origami.from_cycles("(1,2)", "(1,3)", 3)
Q = SingularityProfile.parse


def brute_canonical(o: Origami) -> tuple:
    """Least conjugate over every relabeling (independent of the BFS form)."""
    best = None
    for pi in permutations(range(o.n)):
        p = o.relabel(pi)
        key = (p.r, p.u)
        if best is None or key < best:
            best = key
    return best


def test_generators_fix_the_torus():
    assert act_T(torus()) == torus()
    assert act_S(torus()) == torus()
    assert canonical_form(torus()) == torus()


def test_three_square_h2_classes_by_exhaustion():
    classes = set()
    for r, u in product(permutations(range(3)), repeat=2):
        o = Origami(r, u)
        if is_connected(o) and singularity_profile(o).label == "H(2)":
            classes.add(brute_canonical(o))
    assert len(classes) == 3
    data = orbit(H2)
    assert data.size == 3
    assert {brute_canonical(o) for o in data.representatives} == classes


def test_three_square_h2_lyapunov_sum():
    rep = sum_lyapunov(orbit(H2))
    assert rep.kappa_abelian == Fraction(2, 9)
    assert rep.mean_cylinder_sum == Fraction(10, 9)
    assert rep.total == Fraction(4, 3)


def test_torus_orbit_and_sum():
    data = orbit(torus())
    assert data.size == 1
    assert sum_lyapunov(data).total == 1


@settings(max_examples=300)
@given(origamis(max_n=6), st.data())
def test_canonical_form_agrees_with_brute_force_classes(o, data):
    pi = data.draw(permutations_of(o.n))
    other = data.draw(origamis(max_n=6))
    same_bfs = canonical_form(o) == canonical_form(other)
    same_brute = other.n == o.n and brute_canonical(o) == brute_canonical(other)
    assert same_bfs == same_brute
    assert canonical_form(o.relabel(pi)) == canonical_form(o)


@settings(max_examples=MANY)
@given(origamis(max_n=30), st.data())
def test_canonical_form_idempotent_and_relabeling_invariant(o, data):
    c = canonical_form(o)
    assert canonical_form(c) == c
    pi = data.draw(permutations_of(o.n))
    assert canonical_form(o.relabel(pi)) == c


@settings(max_examples=MANY)
@given(origamis(max_n=30))
def test_generators_preserve_stratum(o):
    prof = singularity_profile(o)
    for g in (act_T, act_S):
        img = g(o)
        assert img.n == o.n
        assert is_connected(img)
        assert singularity_profile(img) == prof


@settings(max_examples=MANY)
@given(origamis(max_n=30))
def test_vertical_cylinders_partition(o):
    assert horizontal_cylinders(act_S(o)).area == o.n


@settings(max_examples=200)
@given(origamis(min_n=2, max_n=7))
def test_orbit_stratum_constancy_and_well_definedness(o):
    data = orbit(o, budget=20000)
    prof = singularity_profile(o)
    assert all(singularity_profile(s) == prof for s in data.representatives)
    assert all(s.n == o.n for s in data.representatives)
    # restart from another member: same canonical set
    other = orbit(data.representatives[-1], budget=20000)
    assert {(s.r, s.u) for s in other.representatives} == {(s.r, s.u) for s in data.representatives}


def test_orbit_budget_is_an_error(monkeypatch):
    o = unfold_to_origami(classical_integer_table())
    with pytest.raises(OrbitBudgetExceeded):
        orbit(o, budget=2)
    monkeypatch.setenv(BUDGET_ENV, "5")
    assert default_budget() == 5


def test_fourteen_square_pipelines(fourteen_square_origamis):
    quad = Q("Q(1^4,-1^4)")
    expected = [(66, Fraction(28, 11), Fraction(20, 33)), (198, Fraction(80, 33), Fraction(6, 11))]
    for o, (size, total, lam) in zip(fourteen_square_origamis, expected):
        res = lyapunov_pipeline(o, quad)
        assert res["profile_ok"]
        assert res["orbit_size"] == size
        assert res["orbit_sum"] == total
        assert res["deficit"] == Fraction(4, 3)
        assert res["lambda_plus"] == lam


@pytest.mark.parametrize(("L1", "L2", "a", "b"), [(2, 2, 1, 1), (3, 2, 1, 1), (3, 3, 1, 1), (3, 3, 2, 1), (4, 3, 1, 1), (3, 3, 2, 2)])
def test_top_exponent_is_two_thirds_on_every_m1_table(L1, L2, a, b):
    """Square-tiled rectangles of any size give covers of one genus-0 surface
    branched only over the four special poles, so the top exponent of the
    invariant part stays 2/3 while the orbit sizes vary."""
    table = WindTreeTable(L1, L2, frozenset((i, j) for i in range(a) for j in range(b)))
    quotient = quotient_by_tau_v(table)
    prof = singularity_profile(quotient)
    assert prof.label == "H(2^2)"
    quad = Q("Q(1^2,-1^2)")
    assert orienting_cover_profile(quad) == prof
    total = sum_lyapunov(orbit(quotient)).total
    assert total == 2
    assert lambda_plus_from_cover(total, quad) == Fraction(2, 3)


def test_kappa_and_deficit_values():
    assert kappa_abelian(Q("H(2)")) == Fraction(2, 9)
    assert deficit(Q("Q(1^6,-1^6)")) == 2
    assert deficit(Q("Q(1^4,-1^4)")) == Fraction(4, 3)
    assert deficit(Q("Q(2,2,-1^4)")) == 1
    assert deficit(SingularityProfile([2, 2, 4], "quadratic")) == 0


def test_lambda_plus_from_cover():
    assert lambda_plus_from_cover(Fraction(3088, 1053), Q("Q(1^6,-1^6)")) == Fraction(491, 1053)
    with pytest.raises(GenusPlusNotOne):
        lambda_plus_from_cover(Fraction(1), Q("Q(1,-1^5)"))


@given(st.fractions(max_denominator=10**6))
def test_lambda_plus_round_trip(x):
    prof = Q("Q(1^6,-1^6)")
    assert lambda_plus_from_cover(2 * x + deficit(prof), prof) == x


def test_cover_profiles():
    assert orienting_cover_profile(Q("Q(1,-1^5)")).label == "H(2)"
    assert orienting_cover_profile(Q("Q(1^6,-1^6)")).label == "H(2^6)"
    assert orienting_cover_profile(Q("Q(-1^4)")).label == "H()"
    base = Q("Q(1,-1^5)")
    poles = [i for i, d in enumerate(base.orders) if d == -1][:4]
    assert double_cover_profile(base, poles).label == "Q(1^2,-1^2)"
    base3 = Q("Q(1^3,-1^7)")
    poles3 = [i for i, d in enumerate(base3.orders) if d == -1][:4]
    assert double_cover_profile(base3, poles3).label == "Q(1^6,-1^6)"
    assert double_cover_profile(base, []).orders == tuple(sorted(base.orders * 2, reverse=True))
    with pytest.raises(OddRamification):
        double_cover_profile(base, [0])


def test_report_json_shape():
    data = orbit(H2)
    out = sum_lyapunov(data).to_json(data.representatives)
    assert out["total_num"] == 4 and out["total_den"] == 3
    assert out["kappa"] == "2/9" and out["mean_cyl_sum"] == "10/9"
    assert len(out["representatives"]) == 3
