"""Exact maximum clique and the Motzkin-Straus value identities.

The closed forms are cheap; for small graphs they are cross-checked against
an exact quadratic maximisation over the simplex, and any mismatch raises
:class:`ConsistencyError` (that signals a bug, never bad input).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import ConsistencyError, Graph
from .simplex_qp import SimplexQpProblem, maximize

CROSS_CHECK_MAX_N = 7


@dataclass(frozen=True)
class CliqueReport:
    max_clique_size: int
    witness: tuple[int, ...]
    all_maximum_cliques: tuple[tuple[int, ...], ...] | None = None


def _neighbour_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u - 1] |= 1 << (v - 1)
        masks[v - 1] |= 1 << (u - 1)
    return masks


def _colour_order(cand: int, masks: list[int]) -> list[tuple[int, int]]:
    """Greedy sequential colouring; returns (vertex, colour bound) pairs in ascending bound."""
    order = []
    colour = 0
    uncoloured = cand
    while uncoloured:
        colour += 1
        avail = uncoloured
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~masks[v] & ~low
            uncoloured &= ~low
            order.append((v, colour))
    return order


def max_clique(g: Graph, enumerate_all: bool = False) -> CliqueReport:
    """Exact clique number with a witness (branch and bound, colouring bound).

    With ``enumerate_all`` every maximum clique is listed as well.
    """
    masks = _neighbour_masks(g)
    best: list[int] = [0]
    best_set: list[tuple[int, ...]] = [()]
    all_best: list[tuple[int, ...]] = []

    def expand(current: list[int], cand: int) -> None:
        for v, bound in reversed(_colour_order(cand, masks)):
            if len(current) + bound < best[0] or (not enumerate_all and len(current) + bound == best[0]):
                return
            current.append(v)
            new_cand = cand & masks[v]
            if new_cand:
                expand(current, new_cand)
            else:
                size = len(current)
                if size > best[0]:
                    best[0] = size
                    best_set[0] = tuple(sorted(current))
                    all_best.clear()
                if enumerate_all and size == best[0]:
                    all_best.append(tuple(sorted(current)))
            current.pop()
            cand &= ~(1 << v)

    expand([], (1 << g.n) - 1)
    witness = tuple(v + 1 for v in best_set[0])
    cliques = None
    if enumerate_all:
        cliques = tuple(sorted({tuple(v + 1 for v in c) for c in all_best}))
    return CliqueReport(best[0], witness, cliques)


def has_clique(g: Graph, k: int) -> bool:
    if not 1 <= k <= g.n:
        raise ValueError(f"clique size k={k} outside 1..{g.n}")
    return max_clique(g).max_clique_size >= k


def _modified_adjacency(g: Graph, tau: Fraction, rho: Fraction) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(rho if a else tau for a in row) for row in g.adjacency)


def motzkin_straus_value(g: Graph, cross_check_max_n: int = CROSS_CHECK_MAX_N) -> Fraction:
    """``max_{x in simplex} x^T A_G x = (d - 1) / d``."""
    return modified_adjacency_value(g, Fraction(0), Fraction(1), cross_check_max_n)


def modified_adjacency_value(
    g: Graph, tau: Fraction, rho: Fraction, cross_check_max_n: int = CROSS_CHECK_MAX_N
) -> Fraction:
    """Maximum of ``x^T A x`` over the simplex when non-edges carry ``tau`` and edges ``rho``.

    The closed form ``tau + (rho - tau)(d - 1)/d`` is only valid for
    ``rho >= tau``; the diagonal counts as a non-edge. When ``rho < tau`` the
    value is computed by the exact optimiser instead.
    """
    tau, rho = Fraction(tau), Fraction(rho)
    d = max_clique(g).max_clique_size
    if rho < tau:
        return maximize(SimplexQpProblem.over_simplex(_modified_adjacency(g, tau, rho))).max_value
    value = tau + (rho - tau) * Fraction(d - 1, d)
    if g.n <= cross_check_max_n:
        qp = maximize(SimplexQpProblem.over_simplex(_modified_adjacency(g, tau, rho))).max_value
        if qp != value:
            raise ConsistencyError(
                f"closed form {value} disagrees with simplex maximisation {qp} (d={d}, tau={tau}, rho={rho})"
            )
    return value


def scaled_simplex_value(g: Graph, l: Fraction, cross_check_max_n: int = CROSS_CHECK_MAX_N) -> Fraction:
    """``max_{x >= 0, sum x = l} x^T A_G x = ((d - 1)/d) l^2``."""
    l = Fraction(l)
    if l < 0:
        raise ValueError(f"simplex scale must be non-negative, got {l}")
    d = max_clique(g).max_clique_size
    value = Fraction(d - 1, d) * l * l
    if l > 0 and g.n <= cross_check_max_n:
        adj = tuple(tuple(Fraction(a) for a in row) for row in g.adjacency)
        prob = SimplexQpProblem(adj, (), tuple(range(g.n)), l)
        qp = maximize(prob).max_value
        if qp != value:
            raise ConsistencyError(f"closed form {value} disagrees with simplex maximisation {qp} (l={l})")
    return value
