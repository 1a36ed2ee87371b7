from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import MANY, integer_staircase_tables, rectangle_tables
from windtree.errors import (
    AsymmetricObstacle,
    DisconnectedFreeRegion,
    ObstacleTouchesBoundary,
    PatternNotSublatticeInvariant,
)
from windtree.origami import (
    antiautomorphisms,
    genus,
    is_connected,
    is_translation_automorphism,
    perm_compose,
    singularity_profile,
)
from windtree.profile import SingularityProfile
from windtree.table import (
    WindTreeTable,
    chessboard_table,
    classical_integer_table,
    corner_census,
    cross_polygon,
    family_dimension,
    family_index,
    family_table,
    hyperelliptic_profiles,
    quotient_by_tau_v,
    rasterize,
    rectangle_table,
    staircase_polygon,
    stratum_dimension,
    unfold_diagonal_sublattice,
    unfold_to_origami,
    unfolded_square_labels,
    windtree_symmetries,
)
from windtree.teichcurve import canonical_form


# ------------------------------------------------------------ family index


def test_square_obstacle_is_in_family_one():
    assert family_index(classical_integer_table()).m == 1
    assert family_index(rectangle_table(1.0, 1.0, 0.4, 0.7)).m == 1


def test_stepped_cross_with_three_steps_is_in_family_three():
    poly = staircase_polygon(4, 4, [1, 2, 3], [3, 2, 1])
    assert corner_census(poly) == (12, 8)
    assert family_index(WindTreeTable(9, 9, polygons=(poly,))).m == 3


def test_plain_plus_has_eight_convex_corners():
    poly = cross_polygon(2.5, 2.5, 1.5, 0.5)
    assert corner_census(poly) == (8, 4)
    assert family_index(WindTreeTable(5, 5, polygons=(poly,))).m == 2


def test_l_shaped_obstacle_is_rejected():
    table = WindTreeTable(4, 4, frozenset({(1, 1), (2, 1), (1, 2)}))
    with pytest.raises(AsymmetricObstacle):
        family_index(table)


@pytest.mark.parametrize("m", [1, 2, 3, 5, 8])
def test_generic_family_tables_report_their_index(m):
    assert family_index(family_table(m)).m == m


def test_dimensions():
    assert family_dimension(1) == 4
    assert family_dimension(1) + 1 == 5
    assert stratum_dimension(SingularityProfile([-1] * 4, "quadratic")) == 2
    for m in range(1, 12):
        base, _ = hyperelliptic_profiles(m)
        assert stratum_dimension(base) == family_dimension(m) == 2 * m + 2
    with pytest.raises(ValueError):
        family_dimension(0)


# --------------------------------------------------------------- unfolding


def test_smallest_classical_table_unfolds_to_genus_five():
    o = unfold_to_origami(classical_integer_table())
    assert o.n == 12
    assert singularity_profile(o).label == "H(2^4)"
    assert genus(o) == 5


def test_chessboard_unfolds_to_52_squares():
    o = unfold_to_origami(chessboard_table())
    assert o.n == 52
    assert singularity_profile(o).label == "H(2^12)"


def test_table_without_obstacle_gives_four_disjoint_tori():
    with pytest.raises(DisconnectedFreeRegion, match="disconnected"):
        unfold_to_origami(WindTreeTable(2, 2))


def test_obstacle_filling_a_row_is_rejected():
    with pytest.raises(ObstacleTouchesBoundary):
        unfold_to_origami(WindTreeTable(2, 2, frozenset({(0, 0), (1, 0)})))


def test_obstacles_meeting_at_a_corner_are_rejected():
    with pytest.raises(ObstacleTouchesBoundary):
        unfold_to_origami(WindTreeTable(2, 2, frozenset({(0, 0), (1, 1)})))


def test_polygon_and_cell_forms_agree():
    poly_table = WindTreeTable(5, 5, polygons=(cross_polygon(2.5, 2.5, 1.5, 0.5),))
    cells = rasterize(poly_table).blocked
    assert cells == {(2, 1), (1, 2), (2, 2), (3, 2), (2, 3)}
    assert unfold_to_origami(poly_table) == unfold_to_origami(WindTreeTable(5, 5, cells))


def test_text_round_trip():
    for table in (chessboard_table(), family_table(2)):
        assert WindTreeTable.parse(table.to_text()) == table


@settings(max_examples=MANY)
@given(rectangle_tables())
def test_sheet_count_and_flip_structure(table):
    o = unfold_to_origami(table)
    assert o.n == 4 * len(table.free_cells)
    assert is_connected(o)
    labels = unfolded_square_labels(table)
    flip_x = tuple(
        next(j for j, lab in labels.items() if lab == (x, y, 1 - ex, ey)) for x, y, ex, ey in (labels[i] for i in range(o.n))
    )
    flip_y = tuple(
        next(j for j, lab in labels.items() if lab == (x, y, ex, 1 - ey)) for x, y, ex, ey in (labels[i] for i in range(o.n))
    )
    ident = tuple(range(o.n))
    assert perm_compose(flip_x, flip_x) == ident
    assert perm_compose(flip_y, flip_y) == ident
    assert perm_compose(flip_x, flip_y) == perm_compose(flip_y, flip_x)
    # vertical moves never change the horizontal sheet and commute with its flip
    for i in range(o.n):
        assert labels[o.u[i]][2] == labels[i][2]
        assert o.u[flip_x[i]] == flip_x[o.u[i]]
        assert labels[o.r[i]][3] == labels[i][3]
        assert o.r[flip_y[i]] == flip_y[o.r[i]]


@pytest.mark.parametrize("m", [1, 2, 3])
@settings(max_examples=30)
@given(data=st.data())
def test_quotient_profile_depends_only_on_m(m, data):
    table = data.draw(integer_staircase_tables(m))
    assert family_index(table).m == m
    assert singularity_profile(unfold_to_origami(table)) == SingularityProfile([2] * (4 * m), "abelian")
    assert singularity_profile(quotient_by_tau_v(table)) == SingularityProfile([2] * (2 * m), "abelian")


# -------------------------------------------------------------- symmetries


@pytest.mark.parametrize("table", [classical_integer_table(), chessboard_table()], ids=["m1", "chessboard"])
def test_symmetry_group_has_order_eight(table):
    sym = windtree_symmetries(table)
    assert sym.group_order == 8
    o = unfold_to_origami(table)
    assert is_translation_automorphism(o, sym.tau_h)
    assert is_translation_automorphism(o, sym.tau_v)
    assert sym.iota in antiautomorphisms(o)


def test_symmetries_found_on_random_staircases():
    for m in (1, 2, 3):
        sym = windtree_symmetries(WindTreeTable(9, 9, polygons=(staircase_polygon(4, 4, list(range(1, m + 1)), list(range(m, 0, -1))),)))
        assert sym.group_order == 8


def test_quotient_keeps_the_image_of_tau_h():
    table = chessboard_table()
    sym = windtree_symmetries(table)
    q = quotient_by_tau_v(table)
    reps = sorted(i for i in range(len(sym.tau_v)) if i < sym.tau_v[i])
    idx = {}
    for k, i in enumerate(reps):
        idx[i] = idx[sym.tau_v[i]] = k
    image = tuple(idx[sym.tau_h[i]] for i in reps)
    assert is_translation_automorphism(q, image)
    assert perm_compose(image, image) == tuple(range(q.n))
    assert image != tuple(range(q.n))


def test_chessboard_quotient():
    q = quotient_by_tau_v(chessboard_table())
    assert q.n == 26
    assert singularity_profile(q).label == "H(2^6)"


# ----------------------------------------------------- diagonal sublattice


def test_diagonal_pattern_lands_in_the_m1_stratum():
    o = unfold_diagonal_sublattice(WindTreeTable(4, 4, frozenset({(0, 0), (2, 2)})))
    assert o.n == 28
    assert singularity_profile(o) == singularity_profile(unfold_to_origami(classical_integer_table()))
    assert singularity_profile(o).label == "H(2^4)"


def test_full_pattern_matches_the_doubled_domain():
    full = WindTreeTable(4, 4, frozenset({(0, 0), (2, 0), (0, 2), (2, 2)}))
    doubled = WindTreeTable(4, 2, frozenset({(0, 0), (2, 0)}))
    a = unfold_diagonal_sublattice(full)
    b = unfold_to_origami(doubled)
    assert a.n == b.n == 24
    assert singularity_profile(a) == singularity_profile(b)


def test_non_invariant_pattern_is_rejected():
    with pytest.raises(PatternNotSublatticeInvariant):
        unfold_diagonal_sublattice(chessboard_table())
    with pytest.raises(PatternNotSublatticeInvariant):
        unfold_diagonal_sublattice(WindTreeTable(3, 4, frozenset({(0, 0)})))


def test_diagonal_quotient_is_well_defined_up_to_relabeling():
    table = WindTreeTable(4, 4, frozenset({(0, 0), (2, 2)}))
    assert canonical_form(unfold_diagonal_sublattice(table)) == canonical_form(unfold_diagonal_sublattice(table))
