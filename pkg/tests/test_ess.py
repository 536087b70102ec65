from fractions import Fraction

import pytest
from conftest import simplex_grid
from hypothesis import given, settings
from hypothesis import strategies as st

from esslab.core import MixedStrategy, SymmetricGame, expected_payoff
from esslab.ess import (
    CapExceeded,
    best_response_face,
    check_ess,
    enumeration_cap,
    ess_enumerate,
    has_ess,
    invasion_threshold,
    symmetric_ne_enumerate,
)
from esslab.fixtures import crab_game, hawk_dove, rock_paper_scissors

F = Fraction


def test_best_response_faces():
    crab = crab_game()
    assert best_response_face(crab, crab.pure("Small")).ext_supp == (1,)
    assert best_response_face(crab, crab.pure("Large")).ext_supp == (1,)
    const = SymmetricGame.from_rows([[1, 1, 1]] * 3)
    assert best_response_face(const, MixedStrategy.uniform(3)).ext_supp == (0, 1, 2)


def test_crab():
    crab = crab_game()
    assert [s for s, _ in symmetric_ne_enumerate(crab)] == [crab.pure("Large")]
    assert check_ess(crab, crab.pure("Large")).is_ess
    small = check_ess(crab, crab.pure("Small"))
    assert not small.is_symmetric_ne and not small.is_ess
    assert [v.strategy for v in ess_enumerate(crab)] == [crab.pure("Large")]


def test_rock_paper_scissors():
    rps = rock_paper_scissors()
    ne = symmetric_ne_enumerate(rps)
    assert ne == [(MixedStrategy.uniform(3), False)]
    v = check_ess(rps, MixedStrategy.uniform(3))
    assert v.is_symmetric_ne and not v.is_ess
    assert v.counterexample is not None
    assert expected_payoff(rps, v.strategy, v.counterexample) <= expected_payoff(rps, v.counterexample, v.counterexample)
    assert ess_enumerate(rps) == []


def test_constant_game_is_degenerate():
    const = SymmetricGame.from_rows([[1, 1], [1, 1]])
    ne = symmetric_ne_enumerate(const)
    assert any(flag for _, flag in ne)
    assert not has_ess(const)
    listed = ess_enumerate(const, include_non_ess=True)
    assert any(v.degeneracy_limited for v in listed)
    assert not any(v.is_ess for v in listed)


def test_hawk_dove_mixed_ess():
    hd = hawk_dove()
    (v,) = ess_enumerate(hd)
    assert v.strategy.probs == (F(1, 2), F(1, 2))


def test_invasion_crab():
    crab = crab_game()
    large, small = crab.pure("Large"), crab.pure("Small")
    assert invasion_threshold(crab, large, small).threshold == 1
    assert invasion_threshold(crab, small, large).threshold is None
    with pytest.raises(ValueError):
        invasion_threshold(crab, large, large)


def test_invasion_fitness_gap_matches_blend():
    crab = crab_game()
    s, t = crab.pure("Large"), MixedStrategy((F(2, 3), F(1, 3)))
    out = invasion_threshold(crab, s, t)
    for eps in (F(1, 10), F(1, 2), F(9, 10)):
        pop = s.blend(t, eps)
        assert out.fitness_gap(eps) == expected_payoff(crab, s, pop) - expected_payoff(crab, t, pop)


def test_cap(monkeypatch):
    big = SymmetricGame.from_rows([[0] * 21 for _ in range(21)])
    with pytest.raises(CapExceeded):
        symmetric_ne_enumerate(big)
    monkeypatch.setenv("ESSLAB_MAX_N", "25")
    with pytest.warns(RuntimeWarning):
        assert enumeration_cap() == 25


payoff = st.integers(-3, 3)


@st.composite
def small_games(draw):
    m = draw(st.integers(1, 4))
    return SymmetricGame.from_rows([[draw(payoff) for _ in range(m)] for _ in range(m)])


@settings(max_examples=150, deadline=None)
@given(small_games())
def test_nash_existence_and_condition_one(game):
    ne = symmetric_ne_enumerate(game)
    assert ne
    for s, _ in ne:
        u_ss = expected_payoff(game, s, s)
        for i in range(game.size):
            assert expected_payoff(game, game.pure(i), s) <= u_ss


@settings(max_examples=150, deadline=None)
@given(small_games())
def test_verdicts_and_counterexamples(game):
    verdicts = ess_enumerate(game, include_non_ess=True)
    ess = [v for v in verdicts if v.is_ess]
    supports = [v.strategy.support for v in ess]
    assert len(supports) == len(set(supports))
    for v in verdicts:
        assert v.is_symmetric_ne
        if not v.is_ess:
            t = v.counterexample
            face = best_response_face(game, v.strategy).ext_supp
            assert t is not None and t != v.strategy
            assert set(t.support) <= set(face)
            assert expected_payoff(game, v.strategy, t) <= expected_payoff(game, t, t)


@settings(max_examples=80, deadline=None)
@given(small_games())
def test_ess_repels_grid_mutants(game):
    for v in ess_enumerate(game):
        for probs in simplex_grid(game.size, 6):
            t = MixedStrategy(probs)
            if t != v.strategy:
                out = invasion_threshold(game, v.strategy, t)
                assert out.threshold is not None and out.threshold > 0


@settings(max_examples=80, deadline=None)
@given(small_games())
def test_ess_decision_matches_grid_definition(game):
    """Non-ESS equilibria have a grid or counterexample mutant that is not repelled; ESS pass a fine grid."""
    for s, _ in symmetric_ne_enumerate(game):
        v = check_ess(game, s)
        if v.is_ess:
            for probs in simplex_grid(game.size, 12):
                t = MixedStrategy(probs)
                if t != s and expected_payoff(game, t, s) == expected_payoff(game, s, s):
                    assert expected_payoff(game, s, t) > expected_payoff(game, t, t)
        else:
            assert invasion_threshold(game, s, v.counterexample).threshold is None
