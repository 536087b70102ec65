"""Exact global maximisation of ``x^T M x + c^T x`` over a face of a scaled simplex.

Every nonempty support ``T`` of the face gets its stationarity system

    ((M + M^T) x + c)_i = mu   for i in T,   sum_T x = mass,   x = 0 off T,

solved exactly. The objective is constant on each solution set: a direction
``v`` inside it satisfies ``(M + M^T) v = const`` on ``T`` and ``sum v = 0``,
hence ``v^T M v = 0``. A maximiser of minimal support is an isolated solution
with ``x_T > 0``, so the maximum is the best value among isolated positive
stationary points. Positive-dimensional solution sets only matter for
deciding whether the maximiser is unique.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .linalg import AffineSolution, Vector, centroid, polytope_vertices, solve_affine

MAX_FACE = 22


class SimplexQpError(ValueError):
    pass


@dataclass(frozen=True)
class SimplexQpProblem:
    M: tuple[tuple[Fraction, ...], ...]
    c: tuple[Fraction, ...]
    face: tuple[int, ...]
    mass: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        M = tuple(tuple(Fraction(v) for v in row) for row in self.M)
        m = len(M)
        if any(len(row) != m for row in M):
            raise SimplexQpError("objective matrix is not square")
        c = tuple(Fraction(v) for v in self.c) if self.c else (Fraction(0),) * m
        if len(c) != m:
            raise SimplexQpError(f"linear term has length {len(c)}, matrix is {m}x{m}")
        face = tuple(sorted(set(self.face)))
        if not face:
            raise SimplexQpError("face is empty")
        if face[0] < 0 or face[-1] >= m:
            raise SimplexQpError(f"face {face} not inside 0..{m - 1}")
        if Fraction(self.mass) <= 0:
            raise SimplexQpError("mass must be positive")
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "face", face)
        object.__setattr__(self, "mass", Fraction(self.mass))

    @classmethod
    def over_simplex(cls, M, c=None, mass=1) -> "SimplexQpProblem":
        m = len(M)
        return cls(tuple(tuple(r) for r in M), tuple(c) if c is not None else (), tuple(range(m)), Fraction(mass))

    @property
    def m(self) -> int:
        return len(self.M)

    def objective(self, x: Sequence[Fraction]) -> Fraction:
        nz = [i for i in range(self.m) if x[i]]
        quad = sum((x[i] * self.M[i][j] * x[j] for i in nz for j in nz), Fraction(0))
        return quad + sum((self.c[i] * x[i] for i in nz), Fraction(0))

    def is_feasible(self, x: Sequence[Fraction]) -> bool:
        fset = set(self.face)
        return (
            len(x) == self.m
            and all(v >= 0 for v in x)
            and all(v == 0 for i, v in enumerate(x) if i not in fset)
            and sum(x, Fraction(0)) == self.mass
        )


@dataclass(frozen=True)
class StationarySet:
    """Affine set of stationary points of one support; objective constant on it."""

    support: tuple[int, ...]
    particular: Vector
    basis: tuple[Vector, ...]
    value: Fraction
    vertices: tuple[Vector, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class SimplexQpSolution:
    max_value: Fraction
    maximizers: tuple[Vector, ...]
    stationary_sets: tuple[StationarySet, ...] = field(default=())
    unique_maximizer: bool = True
    supports_examined: int = 0


def _stationary_system(problem: SimplexQpProblem, support: tuple[int, ...]) -> AffineSolution | None:
    """Solve for ``(x_T, mu)``; returns the solution lifted to full ``x`` coordinates."""
    M, c = problem.M, problem.c
    t = len(support)
    mat = []
    rhs = []
    for i in support:
        mat.append([M[i][j] + M[j][i] for j in support] + [Fraction(-1)])
        rhs.append(-c[i])
    mat.append([Fraction(1)] * t + [Fraction(0)])
    rhs.append(problem.mass)
    sol = solve_affine(mat, rhs)
    if sol is None:
        return None

    def lift(vec: Vector) -> Vector:
        full = [Fraction(0)] * problem.m
        for pos, i in enumerate(support):
            full[i] = vec[pos]
        return tuple(full)

    return AffineSolution(lift(sol.particular), tuple(lift(b) for b in sol.basis))


def _support_constraints(m: int, support: Iterable[int]) -> list[tuple[tuple[Fraction, ...], Fraction]]:
    out = []
    for i in support:
        e = [Fraction(0)] * m
        e[i] = Fraction(1)
        out.append((tuple(e), Fraction(0)))
    return out


def iter_supports(face: Sequence[int]) -> Iterable[tuple[int, ...]]:
    """Nonempty subsets ordered by size, then lexicographically."""
    for size in range(1, len(face) + 1):
        yield from combinations(face, size)


def maximize(problem: SimplexQpProblem, cap: int = MAX_FACE) -> SimplexQpSolution:
    if len(problem.face) > cap:
        raise SimplexQpError(f"face of size {len(problem.face)} exceeds the enumeration cap {cap}")

    isolated: list[tuple[Fraction, tuple[int, ...], Vector]] = []
    degenerate: list[tuple[tuple[int, ...], AffineSolution, Fraction]] = []
    examined = 0
    for support in iter_supports(problem.face):
        examined += 1
        sol = _stationary_system(problem, support)
        if sol is None:
            continue
        value = problem.objective(sol.particular)
        if sol.dim == 0:
            x = sol.particular
            if all(x[i] > 0 for i in support):
                isolated.append((value, support, x))
        else:
            degenerate.append((support, sol, value))

    if not isolated:
        raise SimplexQpError("no stationary point found; internal inconsistency")
    best = max(v for v, _, _ in isolated)
    points = [x for v, _, x in isolated if v == best]
    unique = len(points) == 1

    sets = []
    for support, sol, value in degenerate:
        if value != best:
            continue
        verts = polytope_vertices(sol, _support_constraints(problem.m, support))
        if not verts:
            continue
        mid = centroid(verts)
        if all(mid[i] > 0 for i in support):
            # relatively open piece of a positive-dimensional set: a continuum of maximisers
            unique = False
            sets.append(StationarySet(support, sol.particular, sol.basis, value, tuple(verts)))
            if mid not in points:
                points.append(mid)

    return SimplexQpSolution(best, tuple(points), tuple(sets), unique, examined)


def grid_check(problem: SimplexQpProblem, step: Fraction) -> Fraction:
    """Best objective value over the lattice of mesh ``step`` on the feasible face.

    An independent lower bound on :func:`maximize`, used as an oracle in tests.
    """
    step = Fraction(step)
    if step <= 0:
        raise SimplexQpError("grid step must be positive")
    units = problem.mass / step
    if units.denominator != 1:
        raise SimplexQpError("grid step must divide the mass")
    total = units.numerator
    face = problem.face
    best = None
    for counts in _compositions(total, len(face)):
        x = [Fraction(0)] * problem.m
        for i, k in zip(face, counts):
            x[i] = k * step
        val = problem.objective(x)
        if best is None or val > best:
            best = val
    return best


def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


__all__ = [
    "SimplexQpError",
    "SimplexQpProblem",
    "SimplexQpSolution",
    "StationarySet",
    "grid_check",
    "iter_supports",
    "maximize",
]
