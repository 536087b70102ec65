"""Best responses, symmetric Nash equilibria and exact ESS decisions.

Condition 2 of the ESS definition is decided by maximising

    f(t) = t^T A t - s^T A t

over the best-response face of ``s``. ``s`` is an ESS exactly when ``s`` is a
symmetric NE, ``max f = 0`` and ``s`` is the only maximiser.
"""

from __future__ import annotations

import os
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .core import ConsistencyError, MixedStrategy, SymmetricGame, _check_size, expected_payoff
from .linalg import AffineSolution, Vector, centroid, polytope_vertices, solve_affine
from .simplex_qp import MAX_FACE, SimplexQpProblem, SimplexQpSolution, maximize

DEFAULT_MAX_N = 20


def enumeration_cap() -> int:
    """Support-enumeration cap, overridable through ``ESSLAB_MAX_N``."""
    raw = os.environ.get("ESSLAB_MAX_N")
    if not raw:
        return DEFAULT_MAX_N
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"ESSLAB_MAX_N must be an integer, got {raw!r}") from None
    if cap != DEFAULT_MAX_N:
        warnings.warn(
            f"ESSLAB_MAX_N={cap} overrides the default enumeration cap of {DEFAULT_MAX_N}",
            RuntimeWarning,
            stacklevel=2,
        )
    return cap


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class BestResponseFace:
    value: Fraction
    ext_supp: tuple[int, ...]


@dataclass(frozen=True)
class EssVerdict:
    strategy: MixedStrategy
    is_symmetric_ne: bool
    is_ess: bool
    condition2_margin: SimplexQpSolution | None = None
    counterexample: MixedStrategy | None = None
    degeneracy_limited: bool = False

    def to_json(self, labels=None) -> dict:
        out = {
            "strategy": self.strategy.to_json(),
            "describe": self.strategy.describe(labels),
            "is_symmetric_ne": self.is_symmetric_ne,
            "is_ess": self.is_ess,
        }
        if self.condition2_margin is not None:
            out["condition2_max"] = str(self.condition2_margin.max_value)
            out["condition2_unique"] = self.condition2_margin.unique_maximizer
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_json()
        if self.degeneracy_limited:
            out["degeneracy_limited"] = True
        return out


@dataclass(frozen=True)
class InvasionOutcome:
    threshold: Fraction | None
    delta1: Fraction
    delta2: Fraction

    def fitness_gap(self, eps: Fraction) -> Fraction:
        """Incumbent minus mutant fitness against the blended population."""
        return self.delta1 + Fraction(eps) * (self.delta2 - self.delta1)


def best_response_face(game: SymmetricGame, s: MixedStrategy) -> BestResponseFace:
    payoffs = game.payoffs_against(s)
    best = max(payoffs)
    return BestResponseFace(best, tuple(i for i, u in enumerate(payoffs) if u == best))


@dataclass(frozen=True)
class SupportSystem:
    """Indifference system of one support: payoffs equal on ``support``, mass 1."""

    support: tuple[int, ...]
    solution: AffineSolution  # coordinates: x_0..x_{m-1}, v

    @property
    def degenerate(self) -> bool:
        return self.solution.dim > 0


def _support_system(game: SymmetricGame, support: tuple[int, ...]) -> SupportSystem | None:
    m = game.size
    A = game.payoff
    mat = []
    rhs = []
    for i in support:
        mat.append([A[i][j] for j in support] + [Fraction(-1)])
        rhs.append(Fraction(0))
    mat.append([Fraction(1)] * len(support) + [Fraction(0)])
    rhs.append(Fraction(1))
    sol = solve_affine(mat, rhs)
    if sol is None:
        return None

    def lift(vec: Vector) -> Vector:
        full = [Fraction(0)] * (m + 1)
        for pos, i in enumerate(support):
            full[i] = vec[pos]
        full[m] = vec[-1]
        return tuple(full)

    return SupportSystem(support, AffineSolution(lift(sol.particular), tuple(lift(b) for b in sol.basis)))


def _ne_constraints(game: SymmetricGame, support: tuple[int, ...]):
    """Closed feasibility constraints ``x_S >= 0`` and ``v - (A x)_j >= 0`` off S."""
    m = game.size
    cons = []
    for i in support:
        e = [Fraction(0)] * (m + 1)
        e[i] = Fraction(1)
        cons.append((tuple(e), Fraction(0)))
    sset = set(support)
    for j in range(m):
        if j in sset:
            continue
        row = [Fraction(0)] * (m + 1)
        for i in support:
            row[i] = -game.payoff[j][i]
        row[m] = Fraction(1)
        cons.append((tuple(row), Fraction(0)))
    return cons


def _is_ne_point(game: SymmetricGame, support: tuple[int, ...], y: Vector) -> bool:
    m = game.size
    x, v = y[:m], y[m]
    if any(x[i] <= 0 for i in support):
        return False
    sset = set(support)
    for j in range(m):
        if j in sset:
            continue
        if sum((game.payoff[j][i] * x[i] for i in support), Fraction(0)) > v:
            return False
    return True


@dataclass(frozen=True)
class _Candidate:
    strategy: MixedStrategy
    support: tuple[int, ...]
    degenerate: bool
    vertices: tuple[MixedStrategy, ...] = ()


def _iter_ne_candidates(
    game: SymmetricGame, max_support: int | None = None, resolve_degenerate: bool = True
) -> Iterator[_Candidate]:
    m = game.size
    top = m if max_support is None else min(m, max_support)
    for size in range(1, top + 1):
        for support in combinations(range(m), size):
            system = _support_system(game, support)
            if system is None:
                continue
            sol = system.solution
            if not system.degenerate:
                if _is_ne_point(game, support, sol.particular):
                    yield _Candidate(MixedStrategy(sol.particular[:m]), support, False)
                continue
            if not resolve_degenerate:
                continue
            verts = polytope_vertices(sol, _ne_constraints(game, support))
            if not verts:
                continue
            mid = centroid(verts)
            if not all(mid[i] > 0 for i in support):
                # every feasible point has a smaller support; found there
                continue
            yield _Candidate(
                MixedStrategy(mid[:m]),
                support,
                True,
                tuple(MixedStrategy(v[:m]) for v in verts),
            )


def _check_cap(game: SymmetricGame, cap: int | None) -> None:
    cap = enumeration_cap() if cap is None else cap
    if game.size > cap:
        raise CapExceeded(f"game has {game.size} strategies; support enumeration cap is {cap}")


def symmetric_ne_enumerate(game: SymmetricGame, cap: int | None = None) -> list[tuple[MixedStrategy, bool]]:
    """One exact symmetric NE per feasible support system, with a degeneracy flag.

    A support whose solution set is positive-dimensional contributes a
    relative-interior representative and is flagged ``True``.
    """
    _check_cap(game, cap)
    return [(c.strategy, c.degenerate) for c in _iter_ne_candidates(game)]


def check_ess(game: SymmetricGame, s: MixedStrategy, cap: int = MAX_FACE) -> EssVerdict:
    _check_size(game, s)
    payoffs = game.payoffs_against(s)
    u_ss = sum((s.probs[i] * payoffs[i] for i in s.support), Fraction(0))
    best = max(payoffs)
    if best > u_ss:
        return EssVerdict(s, False, False)

    face = tuple(i for i, u in enumerate(payoffs) if u == best)
    quick = _quick_counterexample(game, s, face)
    if quick is not None:
        _verify_counterexample(game, s, quick, face)
        return EssVerdict(s, True, False, None, quick)
    # f(t) = t^T A t - s^T A t ; the linear part is -(A^T s)
    col_payoffs = tuple(
        sum((s.probs[i] * game.payoff[i][j] for i in s.support), Fraction(0)) for j in range(game.size)
    )
    problem = SimplexQpProblem(game.payoff, tuple(-v for v in col_payoffs), face)
    sol = maximize(problem, cap=cap)
    if sol.max_value == 0 and sol.unique_maximizer:
        return EssVerdict(s, True, True, sol)

    t = _counterexample(s, sol)
    verdict = EssVerdict(s, True, False, sol, t)
    _verify_counterexample(game, s, t, face)
    return verdict


def _quick_counterexample(game: SymmetricGame, s: MixedStrategy, face: tuple[int, ...]) -> MixedStrategy | None:
    """Cheap search among face vertices and pairwise midpoints before the full QP."""
    m = game.size
    half = Fraction(1, 2)
    pures = [MixedStrategy.pure(m, i) for i in face]
    candidates = list(pures)
    candidates += [s.blend(t, half) for t in pures]
    candidates += [pures[i].blend(pures[j], half) for i in range(len(pures)) for j in range(i + 1, len(pures))]
    for t in candidates:
        if t != s and expected_payoff(game, s, t) <= expected_payoff(game, t, t):
            return t
    return None


def _counterexample(s: MixedStrategy, sol: SimplexQpSolution) -> MixedStrategy:
    for point in sol.maximizers:
        if point != s.probs:
            return MixedStrategy(point)
    for st in sol.stationary_sets:
        for v in st.vertices:
            if v != s.probs:
                return MixedStrategy(v)
    raise AssertionError("non-unique maximiser without a second point")


def _verify_counterexample(game: SymmetricGame, s: MixedStrategy, t: MixedStrategy, face) -> None:
    fset = set(face)
    if t == s or any(i not in fset for i in t.support):
        raise ConsistencyError(f"counterexample {t.probs} is not an alternative best response")
    if expected_payoff(game, s, t) > expected_payoff(game, t, t):
        raise ConsistencyError(f"counterexample {t.probs} does not violate condition 2")


def ess_enumerate(
    game: SymmetricGame,
    cap: int | None = None,
    first_only: bool = False,
    max_support: int | None = None,
    include_non_ess: bool = False,
) -> list[EssVerdict]:
    """Exact ESS list, sorted by support.

    Only supports with an isolated solution can carry an ESS: if the
    indifference system of ``supp(s)`` has a solution line through ``s``, a
    point ``t`` on it near ``s`` is a best response with
    ``U(s, t) = U(t, t)``. Degenerate supports are therefore skipped unless
    ``include_non_ess`` asks for every equilibrium, in which case their
    polytope vertices and an interior point are reported with
    ``degeneracy_limited`` set.
    """
    _check_cap(game, cap)
    seen: set[tuple[Fraction, ...]] = set()
    verdicts: list[EssVerdict] = []
    for cand in _iter_ne_candidates(game, max_support=max_support, resolve_degenerate=include_non_ess):
        pool = [cand.strategy, *cand.vertices] if cand.degenerate else [cand.strategy]
        for s in pool:
            if s.probs in seen:
                continue
            seen.add(s.probs)
            v = check_ess(game, s)
            if cand.degenerate:
                v = EssVerdict(v.strategy, v.is_symmetric_ne, v.is_ess, v.condition2_margin, v.counterexample, True)
            if v.is_ess or include_non_ess:
                verdicts.append(v)
                if first_only and v.is_ess:
                    return verdicts
    verdicts.sort(key=lambda v: (len(v.strategy.support), v.strategy.support, v.strategy.probs))
    return verdicts


def has_ess(game: SymmetricGame, cap: int | None = None) -> bool:
    return any(v.is_ess for v in ess_enumerate(game, cap=cap, first_only=True))


def invasion_threshold(game: SymmetricGame, incumbent: MixedStrategy, mutant: MixedStrategy) -> InvasionOutcome:
    """Largest ``eps`` below which incumbents strictly out-earn mutants in the blend.

    ``None`` means no positive share of mutants can be repelled.
    """
    if incumbent == mutant:
        raise ValueError("incumbent and mutant strategies coincide")
    s, t = incumbent, mutant
    d1 = expected_payoff(game, s, s) - expected_payoff(game, t, s)
    d2 = expected_payoff(game, s, t) - expected_payoff(game, t, t)
    if d1 > 0:
        if d2 >= d1:
            return InvasionOutcome(Fraction(1), d1, d2)
        return InvasionOutcome(min(Fraction(1), d1 / (d1 - d2)), d1, d2)
    if d1 == 0:
        return InvasionOutcome(Fraction(1) if d2 > 0 else None, d1, d2)
    return InvasionOutcome(None, d1, d2)
