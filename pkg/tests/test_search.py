import pytest
from conftest import clique_number_oracle, random_graphs, small_graphs

from esslab.core import Graph
from esslab.reduction import EL1, ReductionParams, build_game
from esslab.search import ADAPTIVE, CONSERVATIVE, binary_clique_search, call_bound, dec_ess

TRACE = lambda t: [(s.low, s.high, s.mid, s.answer) for s in t.steps]  # noqa: E731


@pytest.mark.parametrize("mode", [CONSERVATIVE, ADAPTIVE])
def test_hand_traces(mode):
    t = binary_clique_search(Graph.path(3), EL1, mode)
    assert TRACE(t) == [(1, 3, 2, "no"), (2, 3, 3, "yes")] and t.result == 2 and t.oracle_calls == 2
    t = binary_clique_search(Graph.complete(3), EL1, mode)
    assert TRACE(t) == [(1, 3, 2, "no"), (2, 3, 3, "no")] and t.result == 3
    t = binary_clique_search(Graph.empty(3), EL1, mode)
    assert TRACE(t) == [(1, 3, 2, "yes")] and t.result == 1 and t.oracle_calls == 1


def test_single_vertex_needs_no_oracle():
    t = binary_clique_search(Graph.empty(1))
    assert t.result == 1 and t.oracle_calls == 0


def test_dec_ess_examples():
    p3, k3 = Graph.path(3), Graph.complete(3)
    assert dec_ess(build_game(p3, ReductionParams(3, "2/5", "4/5")))
    assert not dec_ess(build_game(p3, ReductionParams(2, "2/5", "4/5")))
    assert not dec_ess(build_game(k3, ReductionParams(3, "2/5", "4/5")))


def test_call_bound():
    assert [call_bound(n) for n in (1, 2, 3, 4, 5, 8, 9)] == [0, 1, 2, 2, 3, 3, 4]


@pytest.mark.parametrize("mode", [CONSERVATIVE, ADAPTIVE])
def test_small_graphs_and_loop_invariant(mode):
    for g in small_graphs(4) + random_graphs(6, 4, 3):
        d = clique_number_oracle(g)
        t = binary_clique_search(g, EL1, mode, seed=1)
        assert t.result == d
        assert t.oracle_calls <= call_bound(g.n)
        for s in t.steps:
            assert s.low <= d <= s.high
            assert s.mid == (s.low + s.high + 1) // 2


def test_trace_is_reproducible():
    g = random_graphs(5, 1, 8)[0]
    assert binary_clique_search(g, 3, seed=4).to_json() == binary_clique_search(g, 3, seed=4).to_json()


def test_bad_mode():
    with pytest.raises(ValueError):
        binary_clique_search(Graph.path(3), EL1, "sometimes")
