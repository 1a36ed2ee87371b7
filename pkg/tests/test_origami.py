from __future__ import annotations

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import MANY, origamis, permutations_of
from windtree.errors import (
    DisconnectedOrigami,
    MalformedPermutation,
    NonIntegralGenus,
    NotAutomorphism,
    NotFixedPointFree,
    SizeMismatch,
)
from windtree.origami import (
    Origami,
    antiautomorphisms,
    commutator,
    cycles_to_str,
    genus,
    horizontal_cylinders,
    is_connected,
    parse_permutation,
    perm_compose,
    perm_cycles,
    perm_inverse,
    quotient_by_translation_involution,
    singularity_profile,
    torus,
    translation_automorphisms,
    validate,
)
from windtree.profile import SingularityProfile
from windtree.profile import genus as profile_genus
from windtree.reproduce import PRINTED_HAT_S_R

H2 = Origami.from_cycles("(1,2)", "(1,3)", 3)


# ------------------------------------------------------------------ parsing


def test_cycle_and_one_line_forms_agree():
    assert parse_permutation("(1,3,2)", 4) == parse_permutation([3, 1, 2, 4])
    assert parse_permutation("[3 1 2 4]") == (2, 0, 1, 3)
    assert parse_permutation("()", 3) == (0, 1, 2)


def test_fixed_points_may_be_omitted():
    assert parse_permutation("(2,3)", 4) == (0, 2, 1, 3)


def test_repeated_symbol_is_malformed():
    with pytest.raises(MalformedPermutation):
        parse_permutation("(1,2)(2,3)")


def test_printed_chessboard_cycles_are_not_a_permutation():
    with pytest.raises(MalformedPermutation):
        parse_permutation(PRINTED_HAT_S_R, 26)


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        parse_permutation("(1,5)", 4)
    with pytest.raises(SizeMismatch):
        Origami((0, 1), (0,))
    with pytest.raises(MalformedPermutation):
        parse_permutation([1, 1, 2])


def test_text_round_trip(fourteen_square_origamis):
    for o in fourteen_square_origamis:
        assert Origami.parse(o.to_text()) == o
    text = "14\nr=(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)\nu=(1,3,13,8,2,14)(4,6,11,5,10,12)(7,9)\n"
    assert Origami.parse(text) == fourteen_square_origamis[0]


def test_validate_torus():
    assert validate(1, "()", "()") == torus()


# ------------------------------------------------------------- connectivity


def test_connectivity_examples(fourteen_square_origamis):
    assert is_connected(torus())
    assert not is_connected(Origami((0, 1), (0, 1)))
    assert all(is_connected(o) for o in fourteen_square_origamis)


def test_disconnected_profile_rejected():
    with pytest.raises(DisconnectedOrigami):
        singularity_profile(Origami((0, 1), (0, 1)))


# --------------------------------------------------------------- structure


def test_torus_structure():
    assert singularity_profile(torus()).orders == ()
    assert genus(torus()) == 1
    assert horizontal_cylinders(torus()).cylinders == ((1, 1),)


def test_three_square_h2():
    assert singularity_profile(H2).label == "H(2)"
    assert genus(H2) == 2
    cyl = horizontal_cylinders(H2)
    assert sorted(cyl.cylinders) == [(1, 1), (2, 1)]
    assert cyl.modulus_sum() == Fraction(3, 2)


def test_commutator_of_h2_is_a_three_cycle():
    assert [len(c) for c in perm_cycles(commutator(H2))] == [3]


def test_fourteen_square_profiles(fourteen_square_origamis):
    for o in fourteen_square_origamis:
        assert singularity_profile(o).label == "H(2^4)"
        assert genus(o) == 5


@pytest.mark.parametrize(
    ("orders", "kind", "g"),
    [([2, 2, 2, 2], "abelian", 5), ([1, -1, -1, -1, -1, -1], "quadratic", 0), ([1, 1, -1, -1], "quadratic", 1)],
)
def test_profile_genus(orders, kind, g):
    assert profile_genus(SingularityProfile(orders, kind)) == g


def test_non_integral_genus():
    with pytest.raises(NonIntegralGenus):
        profile_genus(SingularityProfile([1], "abelian"))
    with pytest.raises(NonIntegralGenus):
        profile_genus(SingularityProfile([1, -1, -1], "quadratic"))


def test_profile_labels_round_trip():
    for label in ["H(2^4)", "Q(1^6,-1^6)", "Q(2,1,-1^7)", "H()"]:
        assert SingularityProfile.parse(label).label == label


# ------------------------------------------------------------- symmetries


def test_automorphism_examples():
    assert translation_automorphisms(torus()) == [(0,)]
    two = Origami((1, 0), (1, 0))
    assert sorted(translation_automorphisms(two)) == [(0, 1), (1, 0)]
    assert antiautomorphisms(torus()) == [(0,)]


def test_antiautomorphisms_by_brute_force():
    o = Origami((1, 2, 0), (0, 1, 2))
    ri, ui = perm_inverse(o.r), perm_inverse(o.u)
    brute = sorted(
        s
        for s in permutations(range(3))
        if perm_compose(perm_compose(s, o.r), perm_inverse(s)) == ri
        and perm_compose(perm_compose(s, o.u), perm_inverse(s)) == ui
    )
    assert sorted(antiautomorphisms(o)) == brute
    assert len(brute) == 3


@settings(max_examples=200)
@given(origamis(max_n=6))
def test_translation_automorphisms_match_brute_force(o):
    brute = sorted(
        s
        for s in permutations(range(o.n))
        if perm_compose(s, o.r) == perm_compose(o.r, s) and perm_compose(s, o.u) == perm_compose(o.u, s)
    )
    assert sorted(translation_automorphisms(o)) == brute


def test_quotient_examples():
    two = Origami((1, 0), (1, 0))
    assert quotient_by_translation_involution(two, (1, 0)) == torus()
    with pytest.raises(NotFixedPointFree):
        quotient_by_translation_involution(two, (0, 1))
    with pytest.raises(NotAutomorphism):
        quotient_by_translation_involution(Origami((1, 2, 3, 0), (0, 1, 2, 3)), (1, 0, 3, 2))


@settings(max_examples=300)
@given(origamis(max_n=16))
def test_quotient_consistency(o):
    for s in translation_automorphisms(o):
        if all(s[i] != i and s[s[i]] == i for i in range(o.n)):
            q = quotient_by_translation_involution(o, s)
            assert q.n * 2 == o.n
            assert len(singularity_profile(q)) <= len(singularity_profile(o))


# -------------------------------------------------------------- invariants


@settings(max_examples=MANY)
@given(origamis(max_n=30), st.data())
def test_relabeling_invariance(o, data):
    pi = data.draw(permutations_of(o.n))
    p = o.relabel(pi)
    assert singularity_profile(p) == singularity_profile(o)
    assert genus(p) == genus(o)
    assert sorted(horizontal_cylinders(p)) == sorted(horizontal_cylinders(o))
    assert len(translation_automorphisms(p)) == len(translation_automorphisms(o))


@settings(max_examples=MANY)
@given(origamis(max_n=30))
def test_cylinders_partition_the_squares(o):
    cyl = horizontal_cylinders(o)
    assert cyl.area == o.n
    assert all(w > 0 and h > 0 for w, h in cyl)


@settings(max_examples=MANY)
@given(origamis(max_n=30))
def test_profile_sum_gives_integral_genus(o):
    prof = singularity_profile(o)
    g = genus(o)
    assert g >= 1
    assert prof.total == 2 * g - 2


def test_cycles_to_str():
    assert cycles_to_str((1, 0, 2)) == "(1,2)"
    assert cycles_to_str((0, 1)) == "()"
