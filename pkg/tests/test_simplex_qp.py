from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from esslab.simplex_qp import MAX_FACE, SimplexQpError, SimplexQpProblem, grid_check, maximize

F = Fraction


def adjacency(n, edges):
    A = [[F(0)] * n for _ in range(n)]
    for u, v in edges:
        A[u][v] = A[v][u] = F(1)
    return A


def test_k3_maximum():
    sol = maximize(SimplexQpProblem.over_simplex(adjacency(3, [(0, 1), (1, 2), (0, 2)])))
    assert sol.max_value == F(2, 3)
    assert sol.maximizers == ((F(1, 3), F(1, 3), F(1, 3)),)
    assert sol.unique_maximizer


def test_zero_objective_not_unique():
    sol = maximize(SimplexQpProblem.over_simplex([[F(0)] * 3 for _ in range(3)]))
    assert sol.max_value == 0
    assert not sol.unique_maximizer


def test_p3_two_edges_attain():
    sol = maximize(SimplexQpProblem.over_simplex(adjacency(3, [(0, 1), (1, 2)])))
    assert sol.max_value == F(1, 2)
    assert (F(1, 2), F(1, 2), F(0)) in sol.maximizers
    assert (F(0), F(1, 2), F(1, 2)) in sol.maximizers
    assert not sol.unique_maximizer


def test_face_restriction_and_mass():
    A = adjacency(3, [(0, 1), (1, 2), (0, 2)])
    sol = maximize(SimplexQpProblem(A, (), (0, 1), F(2)))
    assert sol.max_value == F(2)
    assert sol.maximizers == ((F(1), F(1), F(0)),)


def test_errors():
    with pytest.raises(SimplexQpError):
        SimplexQpProblem([[F(0)]], (), ())
    with pytest.raises(SimplexQpError):
        SimplexQpProblem([[F(0), F(1)]], (), (0,))
    with pytest.raises(SimplexQpError):
        SimplexQpProblem([[F(0)]], (F(1), F(2)), (0,))
    with pytest.raises(SimplexQpError):
        SimplexQpProblem([[F(0)]], (), (0,), F(0))
    big = [[F(0)] * (MAX_FACE + 1) for _ in range(MAX_FACE + 1)]
    with pytest.raises(SimplexQpError):
        maximize(SimplexQpProblem.over_simplex(big))
    with pytest.raises(SimplexQpError):
        grid_check(SimplexQpProblem.over_simplex([[F(1)]]), F(0))


def test_grid_examples():
    k3 = SimplexQpProblem.over_simplex(adjacency(3, [(0, 1), (1, 2), (0, 2)]))
    assert grid_check(k3, F(1, 3)) == F(2, 3)
    p3 = SimplexQpProblem.over_simplex(adjacency(3, [(0, 1), (1, 2)]))
    assert grid_check(p3, F(1, 2)) == F(1, 2)
    assert grid_check(p3, F(1)) == 0


entries = st.integers(-4, 4).map(Fraction)


@st.composite
def problems(draw):
    m = draw(st.integers(1, 4))
    M = [[draw(entries) for _ in range(m)] for _ in range(m)]
    c = [draw(entries) for _ in range(m)]
    face = draw(st.sets(st.integers(0, m - 1), min_size=1))
    return SimplexQpProblem(M, c, tuple(face))


@settings(max_examples=200, deadline=None)
@given(problems())
def test_grid_is_a_lower_bound_and_maximizers_attain(problem):
    sol = maximize(problem)
    assert grid_check(problem, F(1, 6)) <= sol.max_value
    for x in sol.maximizers:
        assert problem.is_feasible(x)
        assert problem.objective(x) == sol.max_value


@settings(max_examples=100, deadline=None)
@given(problems())
def test_stationary_sets_have_constant_value(problem):
    sol = maximize(problem)
    for st_set in sol.stationary_sets:
        basis = st_set.basis
        for z in ([F(0)] * len(basis), [F(1, 7)] * len(basis), [F(-2, 3)] + [F(0)] * (len(basis) - 1)):
            y = list(st_set.particular)
            for zi, b in zip(z, basis):
                y = [a + zi * bj for a, bj in zip(y, b)]
            assert problem.objective(y) == st_set.value


@settings(max_examples=100, deadline=None)
@given(problems())
def test_unique_flag_matches_grid_ties(problem):
    sol = maximize(problem)
    if sol.unique_maximizer:
        (x,) = sol.maximizers
        for d in (6, 12):
            # every grid point other than x stays strictly below the max
            face = problem.face
            for counts in product(range(d + 1), repeat=len(face)):
                if sum(counts) != d:
                    continue
                y = [F(0)] * problem.m
                for i, k in zip(face, counts):
                    y[i] = F(k, d)
                if tuple(y) != x:
                    assert problem.objective(y) < sol.max_value
