import random
from fractions import Fraction

import pytest
from conftest import clique_number_oracle, random_graphs, small_graphs
from hypothesis import given, settings
from hypothesis import strategies as st

from esslab.clique import has_clique, max_clique, modified_adjacency_value, motzkin_straus_value, scaled_simplex_value
from esslab.core import Graph
from esslab.simplex_qp import SimplexQpProblem, maximize

F = Fraction


@pytest.mark.parametrize(
    "g, d",
    [(Graph.path(3), 2), (Graph.complete(3), 3), (Graph.empty(5), 1), (Graph.complete(1), 1)],
)
def test_examples(g, d):
    rep = max_clique(g)
    assert rep.max_clique_size == d
    assert g.is_clique(rep.witness) and len(rep.witness) == d


def test_has_clique_examples():
    p3, k3 = Graph.path(3), Graph.complete(3)
    assert has_clique(p3, 2) and not has_clique(p3, 3) and has_clique(k3, 3)
    with pytest.raises(ValueError):
        has_clique(p3, 4)
    with pytest.raises(ValueError):
        has_clique(p3, 0)


def test_against_networkx_small_and_random():
    graphs = small_graphs(6) + random_graphs(9, 30, 1) + random_graphs(14, 20, 2)
    for g in graphs:
        rep = max_clique(g)
        assert rep.max_clique_size == clique_number_oracle(g)
        assert g.is_clique(rep.witness)


def test_all_maximum_cliques():
    g = Graph.from_edges(5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)])
    rep = max_clique(g, enumerate_all=True)
    assert rep.all_maximum_cliques == ((1, 2, 3), (3, 4, 5))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8), st.data())
def test_adding_an_edge_is_monotone(n, data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    g = random_graphs(n, 1, rng.randrange(10**6))[0]
    missing = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if not g.has_edge(u, v)]
    if not missing:
        return
    u, v = data.draw(st.sampled_from(missing))
    assert max_clique(g.with_edge(u, v)).max_clique_size >= max_clique(g).max_clique_size
    for k in range(1, n + 1):
        assert has_clique(g, k) == (max_clique(g).max_clique_size >= k)


def test_motzkin_straus_examples():
    assert motzkin_straus_value(Graph.complete(3)) == F(2, 3)
    assert motzkin_straus_value(Graph.empty(4)) == 0
    assert motzkin_straus_value(Graph.path(3)) == F(1, 2)


def test_modified_adjacency_examples():
    assert modified_adjacency_value(Graph.path(3), F(1, 3), F(7, 8)) == F(29, 48)
    assert modified_adjacency_value(Graph.path(4), F(2, 5), F(2, 5)) == F(2, 5)
    assert modified_adjacency_value(Graph.complete(3), F(0), F(1)) == F(2, 3)


def test_modified_adjacency_with_rho_below_tau_uses_optimiser():
    g = Graph.path(3)
    adj = [[F(1, 2) if not g.has_edge(u, v) else F(1, 5) for v in g.vertices] for u in g.vertices]
    assert modified_adjacency_value(g, F(1, 2), F(1, 5)) == maximize(SimplexQpProblem.over_simplex(adj)).max_value


def test_scaled_values():
    assert scaled_simplex_value(Graph.complete(3), F(1)) == F(2, 3)
    assert scaled_simplex_value(Graph.path(3), F(0)) == 0
    assert scaled_simplex_value(Graph.path(3), F(2)) == 2
    with pytest.raises(ValueError):
        scaled_simplex_value(Graph.path(3), F(-1))
