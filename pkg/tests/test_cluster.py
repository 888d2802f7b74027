import pytest
from hypothesis import given, settings, strategies as st

from canonical_cones.cartan import cartan, reduced_words, word_graph
from canonical_cones.cluster import (Seed, a_mutation, chart_transition, move_data, mutate_seed, relabel_seed,
                                     same_quiver, seed_from_word, x_mutation)
from canonical_cones.coords import cluster_vars, x
from canonical_cones.errors import FrozenVertexError
from canonical_cones.posrat import PosRat, RationalMap, compose

A2, A3 = cartan("A2"), cartan("A3")


def matrix_mutation(b, k):
    """Fomin-Zelevinsky matrix mutation on a plain list-of-lists."""
    n = len(b)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                out[i][j] = -b[i][j]
            else:
                s = (b[i][k] > 0) - (b[i][k] < 0)
                out[i][j] = b[i][j] + s * max(b[i][k] * b[k][j], 0)
    return out


def ensemble_map(seed):
    """p: X_l = prod_j A_j^eps(l, j)."""
    vs = cluster_vars(sum(k < 0 for k in seed.indices), sum(k > 0 for k in seed.indices))
    return RationalMap(vs, vs, [PosRat.monomial(vs, {x(j): seed.eps(l, j) for j in seed.indices if seed.eps(l, j)})
                                for l in seed.indices])


def test_a2_quiver():
    seed = seed_from_word((1, 2, 1), A2)
    assert set(seed.arrows()) == {(-1, 1, 1), (1, 3, 1), (2, 1, 1), (1, -2, 1)}
    assert seed.mutable == (1,)


def test_a2_quiver_mutated_at_v1():
    seed = mutate_seed(seed_from_word((1, 2, 1), A2), 1)
    assert set(seed.arrows()) == {(1, -1, 1), (3, 1, 1), (1, 2, 1), (-2, 1, 1)}


def test_a1_quiver_is_empty():
    assert seed_from_word((1,), cartan("A1")).arrows() == []


def test_a3_arrow_count():
    seed = seed_from_word((1, 2, 1, 3, 2, 1), A3)
    assert len(seed.arrows()) == 11
    # one arrow between frozen vertices is kept in the form only
    assert sum(1 for k in seed.indices for l in seed.indices if seed.eps(k, l) > 0) == 12


def test_form_is_skew_symmetric():
    for i in reduced_words(A3):
        s = seed_from_word(i, A3)
        assert all(s.eps(k, l) == -s.eps(l, k) for k in s.indices for l in s.indices)


skew = st.integers(3, 5).flatmap(lambda n: st.lists(st.integers(-2, 2), min_size=n * n, max_size=n * n).map(
    lambda v: [[0 if i == j else (v[i * n + j] if i < j else -v[j * n + i]) for j in range(n)] for i in range(n)]))


@settings(max_examples=50, deadline=None)
@given(skew, st.data())
def test_seed_mutation_matches_matrix_mutation(b, data):
    n = len(b)
    seed = Seed(tuple(range(1, n + 1)), frozenset(), tuple(tuple(r) for r in b))
    k = data.draw(st.integers(1, n))
    got = mutate_seed(seed, k)
    want = matrix_mutation(b, k - 1)
    assert [[got.eps(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)] == want
    assert mutate_seed(got, k).form == seed.form


@pytest.mark.parametrize("i", reduced_words(A3)[::3])
def test_mutations_are_involutions(i):
    seed = seed_from_word(i, A3)
    vs = cluster_vars(3, 6)
    for k in seed.mutable:
        other = mutate_seed(seed, k)
        for mut in (a_mutation, x_mutation):
            twice = compose(mut(other, k), mut(seed, k))
            assert all(f.equals(PosRat.var(vs, n)) for f, n in zip(twice.coords, vs.names))


@pytest.mark.parametrize("i", reduced_words(A3)[::4])
def test_mutation_commutes_with_ensemble_map(i):
    seed = seed_from_word(i, A3)
    for k in seed.mutable:
        lhs = compose(x_mutation(seed, k), ensemble_map(seed))
        rhs = compose(ensemble_map(mutate_seed(seed, k)), a_mutation(seed, k))
        pos = seed.position
        assert all(lhs.coords[pos[l]].equals(rhs.coords[pos[l]]) for l in seed.mutable)


def test_frozen_vertex_rejected():
    seed = seed_from_word((1, 2, 1), A2)
    with pytest.raises(FrozenVertexError):
        mutate_seed(seed, 2)
    with pytest.raises(FrozenVertexError):
        x_mutation(seed, -1)
    with pytest.raises(FrozenVertexError):
        mutate_seed(seed, 7)


@pytest.mark.parametrize("label", ["A2", "A3", "D4"])
def test_moves_are_mutations_up_to_relabelling(label):
    # every move of every reduced word; about 12500 moves for D4
    c = cartan(label)
    g = word_graph(c)
    for i in reduced_words(c):
        for m, j in g.neighbours(i):
            vertex, perm = move_data(i, m, c)
            s = seed_from_word(i, c)
            image = relabel_seed(s if vertex is None else mutate_seed(s, vertex), perm)
            assert same_quiver(image, seed_from_word(j, c))


@pytest.mark.parametrize("variety", ["A", "X"])
def test_chart_transitions_round_trip(variety):
    vs = cluster_vars(3, 6)
    ws = reduced_words(A3)
    for j in ws[::5]:
        there = chart_transition(variety, ws[0], j, A3)
        back = chart_transition(variety, j, ws[0], A3)
        assert all(f.equals(PosRat.var(vs, n)) for f, n in zip(compose(back, there).coords, vs.names))


def test_seed_serialisation():
    seed = seed_from_word((1, 2, 1), A2)
    data = seed.to_json()
    assert data["frozen"] == [-2, -1, 2, 3]
    assert "digraph" in seed.to_dot()


def test_letter_products_are_preserved_by_x_transitions():
    # prod_{r=0..m_a} x_{a,r} on one chart pulls back to the same product on any other
    from canonical_cones.cartan import ReducedWord
    from canonical_cones.cluster import carry_cluster
    vs = cluster_vars(3, 6)
    ws = reduced_words(A3)

    def product_of(word, a):
        return PosRat.monomial(vs, {x(k): 1 for k in ReducedWord(word, A3).occurrences[a]})
    for i in ws[::3]:
        for j in ws[1::4]:
            for a in A3.nodes:
                assert carry_cluster(product_of(j, a), "X", i, j, A3).equals(product_of(i, a)), (i, j, a)
    # A2: letter 1 sits at -1, 2 on the word 2,1,2 and at -1, 1, 3 on 1,2,1
    vs2 = cluster_vars(2, 3)
    f = PosRat.parse(vs2, "x[-1]*x[2]")
    assert carry_cluster(f, "X", (1, 2, 1), (2, 1, 2), A2).equals(PosRat.parse(vs2, "x[-1]*x[1]*x[3]"))


def test_x_mutation_neighbour_update_a2():
    # arrow v-1 -> v1: x[-1] becomes x[-1] (1 + x[1]^-1)^-1; arrow v1 -> v3: x[3] becomes x[3] (1 + x[1])
    seed = seed_from_word((1, 2, 1), A2)
    vs = cluster_vars(2, 3)
    m = x_mutation(seed, 1)
    want = ["x[-1]*x[1]/(x[1] + 1)", "x[-2]*(1 + x[1])", "1/x[1]", "x[2]*x[1]/(x[1] + 1)", "x[3]*(1 + x[1])"]
    assert all(f.equals(PosRat.parse(vs, t)) for f, t in zip(m.coords, want))
