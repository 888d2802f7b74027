import pytest

from canonical_cones.cartan import cartan, reduced_words
from canonical_cones.cluster import carry_cluster
from canonical_cones.coords import cluster_vars
from canonical_cones.posrat import PosRat
from canonical_cones.potentials import (bk_component, ghkk_component, ghkk_component_via_mutation,
                                        optimized_seed_sequence, total)

A2, A3 = cartan("A2"), cartan("A3")
SIGNED = (-3, -2, -1, 1, 2, 3)

# W and f^B for the word 1,2,1, worked out by hand from the quiver
W_121 = {-1: "x[-1]^-1 + x[-1]^-1*x[1]^-1", 1: "x[3]^-1", -2: "x[-2]^-1", 2: "x[2]^-1 + x[1]^-1*x[2]^-1"}
FB_121 = {-1: "x[-2]/(x[-1]*x[1]) + x[2]/(x[1]*x[3])", 1: "x[1]/x[3]", -2: "x[1]/(x[-2]*x[2])",
          2: "x[-1]/x[1] + x[-2]*x[3]/(x[1]*x[2])"}


@pytest.mark.parametrize("a", [-1, 1, -2, 2])
def test_a2_components(a):
    vs = cluster_vars(2, 3)
    assert ghkk_component((1, 2, 1), a, A2).expression.equals(PosRat.parse(vs, W_121[a]))
    assert bk_component((1, 2, 1), a, A2).expression.equals(PosRat.parse(vs, FB_121[a]))


def test_components_are_laurent_polynomials():
    for i in reduced_words(A3):
        for a in SIGNED:
            assert ghkk_component(i, a, A3).expression.is_laurent()
            assert bk_component(i, a, A3).expression.is_laurent()


@pytest.mark.parametrize("kind,variety", [("ghkk", "X"), ("bk", "A")])
def test_components_are_chart_independent(kind, variety):
    comp = ghkk_component if kind == "ghkk" else bk_component
    ws = reduced_words(A3)
    for j in ws[1::3]:
        for a in SIGNED:
            here = comp(ws[0], a, A3).expression
            there = carry_cluster(comp(j, a, A3).expression, variety, ws[0], j, A3)
            assert here.equals(there), (j, a)


def test_optimized_seed_sequence():
    assert optimized_seed_sequence((1, 2, 1, 3, 2, 1), 1, A3) == [1, 3]
    assert optimized_seed_sequence((1, 2, 1, 3, 2, 1), 3, A3) == []


@pytest.mark.parametrize("i", reduced_words(A3))
def test_via_mutation_matches_closed_form(i):
    for a in SIGNED:
        assert ghkk_component_via_mutation(i, a, A3).expression.equals(ghkk_component(i, a, A3).expression)


def test_total_is_sum_of_components():
    vs = cluster_vars(2, 3)
    want = sum((PosRat.parse(vs, t) for t in W_121.values()), PosRat.const(vs, 0))
    assert total("W", (1, 2, 1), A2).equals(want)
    assert total("ghkk", (1, 2, 1), A2).equals(want)
    with pytest.raises(ValueError):
        total("nope", (1, 2, 1), A2)


def test_divisor_range():
    with pytest.raises(ValueError):
        ghkk_component((1, 2, 1), 0, A2)
    with pytest.raises(ValueError):
        bk_component((1, 2, 1), 3, A2)


def test_component_json():
    data = ghkk_component((1, 2, 1), -1, A2).to_json()
    assert data["divisor"] == -1 and data["kind"] == "ghkk"
    assert data["trop"]["den"]


def test_via_mutation_d4_spot_checks():
    d4 = cartan("D4")
    ws = reduced_words(d4)
    for i in (d4.longest_word, ws[700], ws[-1]):
        for a in (-4, -3, -2, -1):
            assert ghkk_component_via_mutation(i, a, d4).expression.equals(ghkk_component(i, a, d4).expression)
