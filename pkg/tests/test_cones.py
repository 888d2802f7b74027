from itertools import product

import pytest

from canonical_cones.cartan import ReducedWord, cartan, reduced_words, weyl_dim
from canonical_cones.cones import (CHART_KINDS, bracket, build_cone, chart_map, chart_matrix, cmm_composed, cmm_map,
                                   count_check, phi_chart, phi_prime, polytope_points)
from canonical_cones.errors import CartanError
from canonical_cones.linalg import det
from canonical_cones.polyhedral import ConeH, cones_equal, transform_cone

A2, A3, D4 = cartan("A2"), cartan("A3"), cartan("D4")


def test_bracket_a2():
    w = ReducedWord((1, 2, 1), A2)
    assert bracket(w, -1, 1) == -1  # l = k+
    assert bracket(w, -1, -1) == -1
    assert bracket(w, 1, 2) == 1  # k < l < k+, letters 1 and 2
    assert bracket(w, 2, 1) == 0


def test_bracket_commuting_letters_drop_out():
    w = ReducedWord((1, 3, 2, 1, 3, 2), A3)
    # positions 1 and 2 carry commuting letters 1 and 3
    assert bracket(w, 1, 2) == 0
    assert bracket(w, 1, 3) == 1


def test_graded_string_cone_a2_is_littelmann_cone():
    # l1 >= x3, l2 >= x2 - x3, l1 >= x1 - x2 + 2 x3, x1 >= 0, x2 >= x3 >= 0
    want = ConeH(5, ((1, 0, 0, 0, -1), (0, 1, 0, -1, 1), (1, 0, -1, 1, -2), (0, 0, 1, 0, 0), (0, 0, 0, 1, -1),
                     (0, 0, 0, 0, 1)))
    assert cones_equal(build_cone((1, 2, 1), "graded_string", A2), want)
    assert cones_equal(build_cone((1, 2, 1), "graded_string", A2, route="explicit"), want)


@pytest.mark.parametrize("kind", CHART_KINDS)
def test_chart_maps_are_unimodular_monomial_maps(kind):
    for i in reduced_words(A3):
        m = chart_map(i, kind, A3)
        assert m.is_monomial()
        assert abs(det(chart_matrix(i, kind, A3))) == 1


def test_chart_maps_d4_unimodular():
    for i in reduced_words(D4)[::400]:
        assert all(abs(det(chart_matrix(i, k, D4))) == 1 for k in CHART_KINDS)


def test_unknown_kinds():
    with pytest.raises(ValueError):
        chart_map((1, 2, 1), "nope", A2)
    with pytest.raises(ValueError):
        build_cone((1, 2, 1), "nope", A2)


@pytest.mark.parametrize("dual", [False, True])
def test_cmm_closed_form_is_composed_chart_map(dual):
    for i in reduced_words(A3):
        assert [list(r) for r in cmm_map(i, A3, dual).matrix] == cmm_composed(i, A3, dual)


def test_cmm_maps_string_polytopes_onto_lusztig_polytopes():
    # (l, x) -> (l*, y): string points for weight l become Lusztig points for l*
    for c, words, weights in ((A2, reduced_words(A2), list(product(range(3), repeat=2))),
                              (A3, reduced_words(A3)[::5], [(1, 0, 0), (0, 1, 0), (1, 1, 1)])):
        for i in words:
            m = cmm_map(i, c)
            for lam in weights:
                star = tuple(lam[c.star[a] - 1] for a in c.nodes)
                image = {m(lam + p) for p in polytope_points(i, "string", lam, c)}
                assert image == {star + p for p in polytope_points(i, "lusztig", star, c)}


def test_cone_statements_a2():
    for i in reduced_words(A2):
        ghkk = build_cone(i, "ghkk", A2)
        assert cones_equal(transform_cone(build_cone(i, "graded_lusztig", A2), chart_matrix(i, "gr_iota_star", A2)), ghkk)
        assert cones_equal(transform_cone(build_cone(i, "graded_string", A2), chart_matrix(i, "gr_CA_star", A2)), ghkk)


def test_polytope_counts_d4_small():
    for lam in [(1, 0, 0, 0), (0, 0, 0, 1)]:
        got, want = count_check(D4.longest_word, "string", lam, D4)
        assert got == want == 8


def test_polytope_points_a2_weight_11():
    pts = polytope_points((1, 2, 1), "string", (1, 1), A2)
    assert len(pts) == weyl_dim(A2, (1, 1)) == 8
    assert all(min(p) >= 0 for p in pts)


def test_polytope_weight_validation():
    with pytest.raises(CartanError):
        polytope_points((1, 2, 1), "string", (1,), A2)
    with pytest.raises(CartanError):
        polytope_points((1, 2, 1), "string", (-1, 0), A2)
    with pytest.raises(ValueError):
        polytope_points((1, 2, 1), "mv", (1, 0), A2)


def test_phi_two_ways():
    for i in reduced_words(A2) + reduced_words(A3)[::4]:
        c = A2 if len(i) == 3 else A3
        assert phi_chart(i, c).equals(phi_prime(i, c))
