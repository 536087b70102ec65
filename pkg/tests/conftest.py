import random
import sys
from fractions import Fraction

import networkx as nx
import pytest

from esslab.core import Graph


def to_graph(h: nx.Graph) -> Graph:
    """Relabel a networkx graph onto vertices 1..n."""
    order = {v: i + 1 for i, v in enumerate(sorted(h.nodes))}
    return Graph.from_edges(len(order), [(order[u], order[v]) for u, v in h.edges])


def small_graphs(max_n: int = 5, min_n: int = 1) -> list[Graph]:
    """All graphs up to isomorphism with min_n <= n <= max_n."""
    return [to_graph(h) for h in nx.graph_atlas_g() if min_n <= h.number_of_nodes() <= max_n]


def random_graphs(n: int, count: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.5]
        out.append(Graph.from_edges(n, edges))
    return out


def clique_number_oracle(g: Graph) -> int:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return max(len(c) for c in nx.find_cliques(h))


def simplex_grid(m: int, denominator: int):
    """Every probability vector of length m with entries in (1/denominator) Z."""

    def rec(left: int, parts: int):
        if parts == 1:
            yield (left,)
            return
        for first in range(left + 1):
            for rest in rec(left - first, parts - 1):
                yield (first,) + rest

    for counts in rec(denominator, m):
        yield tuple(Fraction(c, denominator) for c in counts)


@pytest.fixture
def p3() -> Graph:
    return Graph.path(3)


@pytest.fixture
def k3() -> Graph:
    return Graph.complete(3)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
