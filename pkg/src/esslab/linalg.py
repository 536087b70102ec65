"""Exact rational linear algebra.

Systems are cleared to integer rows and reduced with fraction-free
Gauss-Jordan elimination; each row is divided by the gcd of its entries after
every pivot so intermediate integers stay small.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class AffineSolution:
    """Solution set ``{particular + sum_i z_i * basis[i]}`` of ``A y = b``."""

    particular: Vector
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def point(self, z: Sequence[Fraction]) -> Vector:
        y = list(self.particular)
        for zi, b in zip(z, self.basis):
            if zi:
                for j, bj in enumerate(b):
                    y[j] += zi * bj
        return tuple(y)


def _integer_row(coeffs: Sequence[Fraction], rhs: Fraction) -> list[int]:
    vals = [Fraction(c) for c in coeffs] + [Fraction(rhs)]
    den = lcm(*(v.denominator for v in vals))
    return [v.numerator * (den // v.denominator) for v in vals]


def _normalize(row: list[int]) -> list[int]:
    g = gcd(*row)
    if g > 1:
        return [x // g for x in row]
    return row


def solve_affine(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> AffineSolution | None:
    """All solutions of ``matrix @ y = rhs``, or ``None`` when inconsistent."""
    if len(matrix) != len(rhs):
        raise ValueError(f"{len(matrix)} equations but {len(rhs)} right-hand sides")
    ncols = len(matrix[0]) if matrix else 0
    rows = [_integer_row(r, b) for r, b in zip(matrix, rhs)]
    for r in rows:
        if len(r) != ncols + 1:
            raise ValueError("ragged coefficient matrix")

    pivots: list[int] = []
    prow = 0
    for col in range(ncols):
        sel = next((i for i in range(prow, len(rows)) if rows[i][col] != 0), None)
        if sel is None:
            continue
        rows[prow], rows[sel] = rows[sel], rows[prow]
        pr = rows[prow]
        p = pr[col]
        for i in range(len(rows)):
            if i == prow:
                continue
            a = rows[i][col]
            if a == 0:
                continue
            ri = rows[i]
            rows[i] = _normalize([p * x - a * y for x, y in zip(ri, pr)])
        pivots.append(col)
        prow += 1
        if prow == len(rows):
            break

    for r in rows[prow:]:
        if r[-1] != 0:
            return None

    free = [c for c in range(ncols) if c not in set(pivots)]
    particular = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        particular[col] = Fraction(rows[i][-1], rows[i][col])
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i, col in enumerate(pivots):
            if rows[i][f]:
                vec[col] = Fraction(-rows[i][f], rows[i][col])
        basis.append(tuple(vec))
    return AffineSolution(tuple(particular), tuple(basis))


def solve_unique(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Vector | None:
    """The unique solution of a linear system, else ``None``."""
    sol = solve_affine(matrix, rhs)
    if sol is None or sol.dim:
        return None
    return sol.particular


Constraint = tuple[Sequence[Fraction], Fraction]


def polytope_vertices(space: AffineSolution, constraints: Sequence[Constraint]) -> list[Vector]:
    """Vertices of ``{y in space : c . y + c0 >= 0 for every (c, c0)}``.

    Brute force over active sets, so only for small dimensions. The region
    must be bounded (callers work inside a simplex).
    """
    r = space.dim
    rows = []
    for coeffs, const in constraints:
        base = sum((c * p for c, p in zip(coeffs, space.particular)), Fraction(0)) + const
        slope = tuple(sum((c * b for c, b in zip(coeffs, vec)), Fraction(0)) for vec in space.basis)
        rows.append((slope, base))
    if r == 0:
        if all(base >= 0 for _, base in rows):
            return [space.particular]
        return []

    active = [row for row in rows if any(row[0])]
    if any(base < 0 for slope, base in rows if not any(slope)):
        return []
    found: dict[Vector, None] = {}
    for subset in combinations(range(len(active)), r):
        mat = [active[i][0] for i in subset]
        z = solve_unique(mat, [-active[i][1] for i in subset])
        if z is None:
            continue
        if all(sum((s * zi for s, zi in zip(slope, z)), base) >= 0 for slope, base in active):
            found.setdefault(space.point(z), None)
    return sorted(found)


def centroid(points: Sequence[Vector]) -> Vector:
    k = len(points)
    return tuple(sum(col, Fraction(0)) / k for col in zip(*points))
