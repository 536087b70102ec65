from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from esslab.core import (
    Graph,
    MixedStrategy,
    ParseError,
    SymmetricGame,
    expected_payoff,
    format_rational,
    parse_graph,
    parse_rational,
    render_graph,
)
from esslab.fixtures import crab_game

rationals = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 100)


@pytest.mark.parametrize(
    "text, value",
    [("3", Fraction(3)), ("-7/4", Fraction(-7, 4)), (" 6/8 ", Fraction(3, 4)), (5, Fraction(5))],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["0.1", "1e3", "1/0", "", "a/b", True, 1.5])
def test_parse_rational_rejects(bad):
    with pytest.raises(ParseError):
        parse_rational(bad)


@given(rationals)
def test_format_parse_roundtrip(q):
    assert parse_rational(format_rational(q)) == q


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_parse_graph_examples():
    assert parse_graph("p 3 2\ne 1 2\ne 2 3\n") == Graph.path(3)
    assert parse_graph("p 1 0") == Graph.empty(1)
    assert parse_graph("c triangle\np 3 3\ne 1 2\ne 2 3\ne 1 3\n") == Graph.complete(3)


@pytest.mark.parametrize(
    "text, line",
    [
        ("p 3 1\ne 1 1\n", 2),
        ("p 3 1\ne 1 4\n", 2),
        ("p 3 1\nx 1 2\n", 2),
        ("p 3 2\ne 1 2\ne 2 1\n", 3),
        ("e 1 2\n", 1),
    ],
)
def test_parse_graph_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line


def test_parse_graph_edge_count_mismatch():
    with pytest.raises(ParseError):
        parse_graph("p 3 2\ne 1 2\n")


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@given(graphs())
def test_graph_render_roundtrip(g):
    assert parse_graph(render_graph(g)) == g


@given(graphs())
def test_adjacency_symmetric_zero_diagonal(g):
    adj = g.adjacency
    for u in range(g.n):
        assert adj[u][u] == 0
        for v in range(g.n):
            assert adj[u][v] == adj[v][u]
            assert (adj[u][v] == 1) == g.has_edge(u + 1, v + 1)


def test_graph_rejects_loops_and_range():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(2, 2)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 4)])


def test_crab_expected_payoffs():
    game = crab_game()
    large, small = game.pure("Large"), game.pure("Small")
    assert expected_payoff(game, large, large) == 4
    mix = MixedStrategy((Fraction(3, 4), Fraction(1, 4)))
    assert expected_payoff(game, small, mix) == Fraction(11, 2)
    for i in range(2):
        assert expected_payoff(game, game.pure(i), game.pure(i)) == game.payoff[i][i]


def test_expected_payoff_size_mismatch():
    game = crab_game()
    with pytest.raises(ValueError, match="size 3"):
        expected_payoff(game, MixedStrategy.uniform(3), game.pure(0))


@st.composite
def games_and_strategies(draw):
    m = draw(st.integers(1, 4))
    rows = [[draw(rationals) for _ in range(m)] for _ in range(m)]

    def strategy():
        w = [draw(st.integers(0, 5)) for _ in range(m)]
        if sum(w) == 0:
            w[0] = 1
        return MixedStrategy(tuple(Fraction(x, sum(w)) for x in w))

    return SymmetricGame.from_rows(rows), strategy(), strategy()


@given(games_and_strategies())
def test_expected_payoff_summation_order(data):
    game, s, t = data
    direct = sum(
        (s.probs[i] * t.probs[j] * game.payoff[i][j] for i in range(game.size) for j in range(game.size)),
        Fraction(0),
    )
    reverse = sum(
        (s.probs[i] * t.probs[j] * game.payoff[i][j] for j in reversed(range(game.size)) for i in reversed(range(game.size))),
        Fraction(0),
    )
    assert expected_payoff(game, s, t) == direct == reverse


@given(games_and_strategies())
def test_game_json_roundtrip(data):
    game, _, _ = data
    again = SymmetricGame.loads(game.dumps())
    assert again == game
    assert again.dumps() == game.dumps()


def test_strategy_validation():
    with pytest.raises(ValueError):
        MixedStrategy((Fraction(1, 2), Fraction(1, 3)))
    with pytest.raises(ValueError):
        MixedStrategy((Fraction(3, 2), Fraction(-1, 2)))
    s = MixedStrategy.from_json(["1/2", "0", "1/2"])
    assert s.support == (0, 2)
    assert s.to_json() == ["1/2", "0", "1/2"]
