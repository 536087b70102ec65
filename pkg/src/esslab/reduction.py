"""Reduction games from clique to ESS existence, and their parameter regions.

The game over strategies ``a, b, c, 1..n`` has three payoff values: ``tau``
(non-edges, the diagonal and everything against ``b``/``c``), ``rho`` (edges
and everything against ``a`` except from ``b``/``c``) and ``lam`` (row ``a``
against the vertices). Pure ``a`` is the only possible ESS, and it is one
exactly when

    E(d) = tau + rho (d - 1) - d lam < 0

where ``d`` is the clique number. The reduction is correct for a given ``n``
and ``k`` when ``E(d) < 0`` holds precisely for ``d < k``.

Two families of ``lam`` are supported: ``(k - 1)/k`` (``x = "el1"``) and
``1 - 1/k**x`` for integer ``x >= 3``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Union

from .core import Graph, RationalLike, SymmetricGame, format_rational, parse_rational
from .enclosure import (
    DEFAULT_BITS,
    TARGET_WIDTH,
    Enclosure,
    QuadraticSurd,
    approx,
    power,
    power_lt,
)

EL1 = "el1"
SAMPLE_DENOMINATOR = 2**20
MAX_BITS = 4096

Exponent = Union[int, str]
Bound = Union[Fraction, QuadraticSurd, None]


class ReductionError(ValueError):
    """Parameters outside the region where a reduction game is defined."""


class EmptyIntervalError(ReductionError):
    pass


class UndecidedError(RuntimeError):
    """An enclosure comparison did not settle within the precision budget."""


def _check_exponent(x: Exponent) -> Exponent:
    if x == EL1:
        return x
    if isinstance(x, bool) or not isinstance(x, int):
        raise ReductionError(f"x must be an integer >= 3 or {EL1!r}, got {x!r}")
    if x < 3:
        raise ReductionError(f"x = {x} violates x >= 3")
    return x


def lambda_value(k: int, x: Exponent) -> Fraction:
    """Row-``a`` payoff against a vertex when probing for a ``k``-clique."""
    if k < 2:
        raise ReductionError(f"k = {k} violates k >= 2")
    x = _check_exponent(x)
    if x == EL1:
        return Fraction(k - 1, k)
    return 1 - Fraction(1, k**x)


@dataclass(frozen=True)
class ReductionParams:
    k: int
    tau: Fraction
    rho: Fraction
    x: Exponent = EL1
    lam: Fraction = field(init=False)

    def __post_init__(self) -> None:
        tau, rho = parse_rational(self.tau), parse_rational(self.rho)
        failed = []
        if self.k < 2:
            failed.append(f"k >= 2 (k = {self.k})")
        if not tau > 0:
            failed.append(f"0 < tau (tau = {format_rational(tau)})")
        if not tau < rho:
            failed.append(f"tau < rho (tau = {format_rational(tau)}, rho = {format_rational(rho)})")
        if failed:
            raise ReductionError("invalid reduction parameters: " + "; ".join(failed))
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "x", _check_exponent(self.x))
        object.__setattr__(self, "lam", lambda_value(self.k, self.x))

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "x": self.x,
            "tau": format_rational(self.tau),
            "rho": format_rational(self.rho),
            "lambda": format_rational(self.lam),
        }


def strategy_labels(n: int) -> tuple[str, ...]:
    return ("a", "b", "c") + tuple(str(v) for v in range(1, n + 1))


def reduction_game(g: Graph, tau: RationalLike, rho: RationalLike, lam: RationalLike) -> SymmetricGame:
    """Payoff matrix with the three partition values given directly.

    No ordering between the values is enforced, so perturbed matrices can be
    built with this as well.
    """
    tau, rho, lam = parse_rational(tau), parse_rational(rho), parse_rational(lam)
    n = g.n
    rows = [[rho, tau, tau] + [lam] * n]
    rows += [[tau, tau, tau] + [rho] * n for _ in range(2)]
    for u in range(1, n + 1):
        rows.append([rho, tau, tau] + [rho if g.has_edge(u, v) else tau for v in range(1, n + 1)])
    return SymmetricGame.from_rows(rows, strategy_labels(n))


def build_game(g: Graph, params: ReductionParams) -> SymmetricGame:
    return reduction_game(g, params.tau, params.rho, params.lam)


def payoff_partitions(g: Graph) -> dict[str, frozenset[tuple[int, int]]]:
    """Matrix positions holding each symbolic value, indexed like :func:`reduction_game`."""
    size = g.n + 3
    lam = {(0, j) for j in range(3, size)}
    rho = {(0, 0)} | {(i, 0) for i in range(3, size)}
    rho |= {(i, j) for i in (1, 2) for j in range(3, size)}
    rho |= {(u + 2, v + 2) for u, v in g.edges} | {(v + 2, u + 2) for u, v in g.edges}
    everything = {(i, j) for i in range(size) for j in range(size)}
    tau = everything - lam - rho
    return {"tau": frozenset(tau), "rho": frozenset(rho), "lambda": frozenset(lam)}


# --------------------------------------------------------------------------
# Certificates and exact correctness of a parameter choice
# --------------------------------------------------------------------------


def clique_margin(tau: Fraction, rho: Fraction, lam: Fraction, d: int) -> Fraction:
    """``tau + rho (d - 1) - d lam``: negative exactly when pure ``a`` is an ESS at clique number ``d``."""
    return tau + rho * (d - 1) - d * lam


@dataclass(frozen=True)
class Certificates:
    """Sign certificates for one instance.

    ``ess_margin`` is evaluated at the clique number ``d`` and must be negative
    when ``d < k``; ``clique_margin_k`` is evaluated at ``k`` and must be
    non-negative when a ``k``-clique exists.
    """

    k: int
    d: int
    ess_margin: Fraction | None
    clique_margin_k: Fraction | None

    @property
    def holds(self) -> bool:
        if self.d < self.k:
            return self.ess_margin is not None and self.ess_margin < 0
        return self.clique_margin_k is not None and self.clique_margin_k >= 0


def certificates(tau: Fraction, rho: Fraction, lam: Fraction, k: int, d: int) -> Certificates:
    if d < k:
        return Certificates(k, d, clique_margin(tau, rho, lam, d), None)
    return Certificates(k, d, None, clique_margin(tau, rho, lam, k))


def reduction_failures(n: int, tau: Fraction, rho: Fraction, x: Exponent) -> list[tuple[int, int]]:
    """All ``(k, d)`` with ``2 <= k <= n + 1``, ``1 <= d <= n`` where the game answers wrongly.

    The answer is wrong when ``E(d) < 0`` disagrees with ``d < k``. An empty
    list means the parameters are correct for every graph on ``n`` vertices.
    """
    tau, rho = Fraction(tau), Fraction(rho)
    out = []
    for k in range(2, n + 2):
        lam = lambda_value(k, x)
        for d in range(1, n + 1):
            if (clique_margin(tau, rho, lam, d) < 0) != (d < k):
                out.append((k, d))
    return out


# --------------------------------------------------------------------------
# Intervals
# --------------------------------------------------------------------------


def _bound_json(b: Bound):
    if b is None:
        return None
    if isinstance(b, QuadraticSurd):
        return f"{format_rational(b.a)} + {format_rational(b.b)}*sqrt({format_rational(b.r)})"
    return format_rational(b)


@dataclass(frozen=True)
class Interval:
    """Real interval with exact endpoints; ``None`` stands for an infinite end."""

    lo: Bound
    hi: Bound
    lo_closed: bool = True
    hi_closed: bool = False

    def above_lower(self, v: Fraction) -> bool:
        if self.lo is None:
            return True
        return v >= self.lo if self.lo_closed else v > self.lo

    def below_upper(self, v: Fraction) -> bool:
        if self.hi is None:
            return True
        return v <= self.hi if self.hi_closed else v < self.hi

    def __contains__(self, v) -> bool:
        v = Fraction(v)
        return self.above_lower(v) and self.below_upper(v)

    @property
    def is_empty(self) -> bool:
        if self.lo is None or self.hi is None:
            return False
        if isinstance(self.lo, QuadraticSurd):
            raise TypeError("irrational lower bounds are not supported")
        if self.lo_closed and self.hi_closed:
            return not self.hi >= self.lo
        return not self.hi > self.lo

    def to_json(self) -> dict:
        return {
            "lo": _bound_json(self.lo),
            "hi": _bound_json(self.hi),
            "lo_closed": self.lo_closed,
            "hi_closed": self.hi_closed,
            "approx": [None if self.lo is None else approx(self.lo), None if self.hi is None else approx(self.hi)],
        }

    def describe(self) -> str:
        left = "[" if self.lo_closed and self.lo is not None else "("
        right = "]" if self.hi_closed and self.hi is not None else ")"
        lo = "-inf" if self.lo is None else f"{approx(self.lo):.9g}"
        hi = "inf" if self.hi is None else f"{approx(self.hi):.9g}"
        return f"{left}{lo}, {hi}{right}"


@dataclass(frozen=True)
class IntervalReport:
    n: int
    x: Exponent
    rho: Fraction | None
    regime: int | None
    rho_interval: Interval | None
    tau_lower: Fraction | None
    tau_upper: Fraction | QuadraticSurd | None
    nonempty: bool
    regime_intervals: tuple[Interval, ...] = ()

    @property
    def tau_interval(self) -> Interval | None:
        if self.tau_lower is None or self.tau_upper is None:
            return None
        return Interval(self.tau_lower, self.tau_upper, True, False)

    def contains(self, tau: RationalLike) -> bool:
        tau = parse_rational(tau)
        interval = self.tau_interval
        return self.nonempty and interval is not None and tau in interval and tau < self.rho

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "x": self.x,
            "regime": self.regime,
            "rho": None if self.rho is None else format_rational(self.rho),
            "nonempty": self.nonempty,
            "rho_regimes": [r.to_json() for r in self.regime_intervals],
        }
        if self.rho_interval is not None:
            out["rho_interval"] = self.rho_interval.to_json()
        ti = self.tau_interval
        if ti is not None:
            out["tau_interval"] = ti.to_json()
        return out


def _check_n(n: int) -> None:
    if n < 2:
        raise ReductionError(f"n = {n} violates n >= 2")


def el1_rho_regimes(n: int) -> tuple[Interval, Interval]:
    _check_n(n)
    low = 1 - Fraction(4, (n + 1) ** 2)
    mid = 1 - Fraction(1, (n + 1) ** 2)
    return Interval(low, mid, False, True), Interval(mid, Fraction(1), False, False)


def el1_intervals(n: int, rho: RationalLike | None = None) -> IntervalReport:
    """Valid ``tau`` range for ``lam = (k - 1)/k`` at a given ``rho``.

    Without ``rho`` only the two ``rho`` regimes are reported.
    """
    regimes = el1_rho_regimes(n)
    if rho is None:
        return IntervalReport(n, EL1, None, None, None, None, None, True, regimes)
    rho = parse_rational(rho)
    lower = (1 - rho) * (n - 1)
    if rho in regimes[0]:
        # rho - (1 - sqrt(1 - rho))**2 = 2 sqrt(1 - rho) - 2 (1 - rho)
        upper = QuadraticSurd(-2 * (1 - rho), Fraction(2), 1 - rho)
        return IntervalReport(n, EL1, rho, 1, regimes[0], lower, upper, upper > lower, regimes)
    if rho in regimes[1]:
        upper = lower + Fraction(1, n + 1)
        return IntervalReport(n, EL1, rho, 2, regimes[1], lower, upper, upper > lower, regimes)
    return IntervalReport(n, EL1, rho, None, None, None, None, False, regimes)


def elx_thresholds(n: int, x: int) -> tuple[Fraction, Fraction]:
    """``(rho_min, rho_hat)``: the region needs ``rho > rho_min``; the upper bound switches at ``rho_hat``."""
    _check_n(n)
    _check_exponent(x)
    if x == EL1:
        raise ReductionError("elx thresholds need an integer x")
    p2, pn, pn1 = 2**x, n ** (x - 1), (n + 1) ** x
    rho_min = 1 + Fraction(pn - p2, p2 * pn * (n - 1))
    rho_hat = 1 + Fraction(pn1 - n * p2, p2 * pn1 * (n - 1))
    return rho_min, rho_hat


def elx_rho_regimes(n: int, x: int) -> tuple[Interval, Interval]:
    rho_min, rho_hat = elx_thresholds(n, x)
    return Interval(rho_min, rho_hat, False, True), Interval(rho_hat, None, False, False)


def elx_tau_bounds(n: int, x: int, rho: Fraction) -> tuple[Fraction, Fraction]:
    _, rho_hat = elx_thresholds(n, x)
    lower = (1 - rho) * (n - 1) + 1 - Fraction(1, n ** (x - 1))
    if rho <= rho_hat:
        upper = 1 - Fraction(1, 2**x)
    else:
        upper = (1 - rho) * (n - 1) + 1 - Fraction(n, (n + 1) ** x)
    return lower, upper


def elx_intervals(n: int, x: int, rho: RationalLike | None = None) -> IntervalReport:
    """Valid ``tau`` range for ``lam = 1 - 1/k**x`` at a given ``rho``."""
    if x == EL1 or isinstance(x, bool) or not isinstance(x, int) or x < 3:
        raise ReductionError(f"x = {x!r} violates x >= 3")
    regimes = elx_rho_regimes(n, x)
    if rho is None:
        return IntervalReport(n, x, None, None, None, None, None, True, regimes)
    rho = parse_rational(rho)
    lower, upper = elx_tau_bounds(n, x, rho)
    regime = 1 if rho in regimes[0] else 2 if rho in regimes[1] else None
    rho_interval = regimes[regime - 1] if regime else None
    return IntervalReport(n, x, rho, regime, rho_interval, lower, upper, regime is not None and lower < upper, regimes)


def intervals(n: int, x: Exponent, rho: RationalLike | None = None) -> IntervalReport:
    return el1_intervals(n, rho) if x == EL1 else elx_intervals(n, x, rho)


def in_validity_region(n: int, x: Exponent, tau: RationalLike, rho: RationalLike) -> bool:
    """Exact membership of ``(tau, rho)`` in the stated parameter region for graphs of order ``n``."""
    tau, rho = parse_rational(tau), parse_rational(rho)
    if n < 2 or tau >= rho or tau <= 0:
        return False
    if x == EL1:
        return el1_intervals(n, rho).contains(tau)
    if isinstance(x, bool) or not isinstance(x, int) or x < 3:
        return False
    return elx_intervals(n, x, rho).contains(tau)


# --------------------------------------------------------------------------
# Real exponents: certified membership for the envelope checks
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class _RealBounds:
    rho_min: Enclosure
    rho_hat: Enclosure
    inv_pow_n: Enclosure  # 1 / n**(x-1)
    inv_pow_2: Enclosure  # 1 / 2**x
    n_over_pow_n1: Enclosure  # n / (n+1)**x


def _real_bounds(n: int, x: Fraction, bits: int) -> _RealBounds:
    p2 = power(2, x, bits)
    pn = power(n, x - 1, bits)
    pn1 = power(n + 1, x, bits)
    rho_min = 1 + (pn - p2) / (p2 * pn * (n - 1))
    rho_hat = 1 + (pn1 - p2 * n) / (p2 * pn1 * (n - 1))
    return _RealBounds(rho_min, rho_hat, pn.reciprocal(), p2.reciprocal(), n * pn1.reciprocal())


def _lt(a: Enclosure, b: Enclosure) -> bool | None:
    if a.certainly_lt(b):
        return True
    if a.certainly_ge(b):
        return False
    return None


def _refine(decide: Callable[[int], bool | None], what: str) -> bool:
    bits = DEFAULT_BITS
    while bits <= MAX_BITS:
        verdict = decide(bits)
        if verdict is not None:
            return verdict
        bits *= 2
    raise UndecidedError(f"could not decide {what} with {MAX_BITS}-bit enclosures")


def in_real_region(n: int, x: RationalLike, tau: RationalLike, rho: RationalLike) -> bool:
    """Certified membership in the ``lam = 1 - 1/k**x`` region for a rational exponent ``x``.

    Irrational thresholds are bracketed by rational enclosures that are
    refined until every comparison is settled.
    """
    x, tau, rho = parse_rational(x), parse_rational(tau), parse_rational(rho)
    if n < 2 or tau >= rho or tau <= 0:
        return False
    r = Enclosure.exact(rho)
    t = Enclosure.exact(tau)

    def decide(bits: int) -> bool | None:
        b = _real_bounds(n, x, bits)
        below_min = _lt(b.rho_min, r)
        if below_min is None:
            return None
        if not below_min:
            return False
        past_hat = _lt(b.rho_hat, r)
        if past_hat is None:
            return None
        lower = (1 - r) * (n - 1) + 1 - b.inv_pow_n
        if past_hat:
            upper = (1 - r) * (n - 1) + 1 - b.n_over_pow_n1
        else:
            upper = 1 - b.inv_pow_2
        under_lower = _lt(t, lower)
        under_upper = _lt(t, upper)
        if under_lower is True or under_upper is False:
            return False
        if under_lower is None or under_upper is None:
            return None
        return True

    return _refine(decide, f"region membership for n={n}, x={x}")


# --------------------------------------------------------------------------
# Robust rectangle
# --------------------------------------------------------------------------


def admissible_x1(n: int, x0: int, x1: RationalLike) -> bool:
    """``x0 < x1`` and ``n**x1 < (n+1)**x0``, both decided exactly."""
    x1 = parse_rational(x1)
    return x1 > x0 and power_lt(n, x1, n + 1, x0)


def default_x1(n: int, x0: int, max_denominator: int = 64) -> Fraction:
    """A rational close to the midpoint of the admissible range ``(x0, x0 log_n(n+1))``.

    Floats only pick the candidate; admissibility is then verified exactly.
    """
    top = x0 * math.log(n + 1) / math.log(n)
    cand = Fraction((x0 + top) / 2).limit_denominator(max_denominator)
    while not admissible_x1(n, x0, cand):
        max_denominator *= 2
        cand = Fraction((x0 + top) / 2).limit_denominator(max_denominator)
    return cand


def _narrow(compute: Callable[[int], tuple[Enclosure, ...]]) -> tuple[Enclosure, ...]:
    bits = DEFAULT_BITS
    while True:
        encs = compute(bits)
        if all(e.width <= TARGET_WIDTH for e in encs):
            return encs
        bits *= 2
        if bits > MAX_BITS:
            raise UndecidedError("enclosures did not reach the target width")


def rectangle_width(n: int, x0: int, x1: RationalLike, bits: int = DEFAULT_BITS) -> Enclosure:
    """Enclosure of ``C = n/(n-1) * (n**-x1 - (n+1)**-x0)``."""
    x1 = parse_rational(x1)
    return Fraction(n, n - 1) * (power(n, -x1, bits) - Fraction(1, (n + 1) ** x0))


@dataclass(frozen=True)
class RobustRectangle:
    n: int
    x0: int
    x1: Fraction
    A: Fraction
    C: Enclosure
    D: Enclosure
    B: Enclosure
    rho_C: Enclosure
    rho_hat: Fraction
    tau_interval: Interval
    rho_interval: Interval

    def lambda_interval(self, k: int) -> Interval:
        """``[1 - k**-x0, 1 - k**-x1]`` with an inward rational upper end."""
        if k < 2:
            raise ReductionError(f"k = {k} violates k >= 2")
        lo = 1 - Fraction(1, k**self.x0)
        hi_enc = 1 - power(k, -self.x1, DEFAULT_BITS * 2)
        return Interval(lo, hi_enc.lo, True, True)

    def to_json(self) -> dict:
        def enc(e: Enclosure) -> dict:
            return {"lo": format_rational(e.lo), "hi": format_rational(e.hi), "approx": approx(e)}

        return {
            "n": self.n,
            "x0": self.x0,
            "x1": format_rational(self.x1),
            "A": format_rational(self.A),
            "A_approx": approx(self.A),
            "C": enc(self.C),
            "D": enc(self.D),
            "B": enc(self.B),
            "rho_C": enc(self.rho_C),
            "rho_hat": format_rational(self.rho_hat),
            "tau_interval": self.tau_interval.to_json(),
            "rho_interval": self.rho_interval.to_json(),
            "lambda_intervals": {str(k): self.lambda_interval(k).to_json() for k in range(2, self.n + 1)},
        }


def half_width(n: int, x0: int, x1: RationalLike) -> Fraction:
    """A dyadic rational within ``2**-80`` below ``C / 2``."""
    c = rectangle_width(n, x0, x1, DEFAULT_BITS * 2)
    scale = 1 << 80
    return Fraction(math.floor(c.lo / 2 * scale), scale)


def robust_rectangle(n: int, x0: int, x1: RationalLike | None = None, A: RationalLike | None = None) -> RobustRectangle:
    """Parameter box inside which every ``(tau, rho, lam)`` gives a correct reduction.

    ``x1`` defaults to :func:`default_x1` and ``A`` to :func:`half_width`.
    """
    _check_n(n)
    if isinstance(x0, bool) or not isinstance(x0, int) or x0 < 3:
        raise ReductionError(f"x0 = {x0!r} violates x0 >= 3")
    x1 = default_x1(n, x0) if x1 is None else parse_rational(x1)
    if not x1 > x0:
        raise ReductionError(f"x1 = {format_rational(x1)} violates x0 < x1 (x0 = {x0})")
    if not power_lt(n, x1, n + 1, x0):
        raise ReductionError(
            f"x1 = {format_rational(x1)} violates n**x1 < (n+1)**x0 (n = {n}, x0 = {x0}), i.e. x1 < x0 log_n(n+1)"
        )
    A = half_width(n, x0, x1) if A is None else parse_rational(A)
    if not A > 0:
        raise ReductionError(f"A = {format_rational(A)} violates 0 < A")

    below_c = _refine(lambda bits: _lt(Enclosure.exact(A), rectangle_width(n, x0, x1, bits)), "A < C")
    if not below_c:
        raise ReductionError(f"A = {format_rational(A)} violates A < C")

    def compute(bits: int) -> tuple[Enclosure, ...]:
        c = rectangle_width(n, x0, x1, bits)
        rho_c = 1 - Fraction(1, 2**x0 * (n - 1)) - power(n, 1 - x1, bits) / (n - 1)
        return c, c * (n - 1), (c - A) * (n - 1), rho_c

    C, D, B, rho_C = _narrow(compute)
    _, rho_hat = elx_thresholds(n, x0)
    flat = 1 - Fraction(1, 2**x0)
    # lower end moved inward (up) to a rational; the upper end 1 - 2**-x0 - D + B is exact
    tau_interval = Interval(flat - D.lo, flat - (n - 1) * A, True, False)
    rho_interval = Interval(rho_hat, rho_hat + A, False, False)
    return RobustRectangle(n, x0, x1, A, C, D, B, rho_C, rho_hat, tau_interval, rho_interval)


def lambda_exponent_between(k: int, lam: Fraction, lo: RationalLike, hi: RationalLike) -> bool:
    """Exact test of ``lo <= -log_k(1 - lam) <= hi``, i.e. ``k**-lo >= 1 - lam >= k**-hi``."""
    lam, lo, hi = Fraction(lam), parse_rational(lo), parse_rational(hi)
    gap = 1 - lam
    if gap <= 0:
        return False
    return _sign_gap_times_power(k, lo, gap) <= 0 and _sign_gap_times_power(k, hi, gap) >= 0


def _sign_gap_times_power(k: int, e: Fraction, gap: Fraction) -> int:
    """Sign of ``gap * k**e - 1`` for ``gap > 0``, via ``gap**q * k**p`` with ``e = p/q``."""
    lhs = gap**e.denominator * Fraction(k) ** e.numerator
    return (lhs > 1) - (lhs < 1)


# --------------------------------------------------------------------------
# Sampling
# --------------------------------------------------------------------------


def _floor_bound(b: Bound, denominator: int) -> int:
    if isinstance(b, QuadraticSurd):
        return math.floor(b.enclosure().lo * denominator) - 1
    return math.floor(b * denominator)


def _ceil_bound(b: Bound, denominator: int) -> int:
    if isinstance(b, QuadraticSurd):
        return math.ceil(b.enclosure().hi * denominator) + 1
    return math.ceil(b * denominator)


def grid_range(interval: Interval, denominator: int = SAMPLE_DENOMINATOR) -> tuple[int, int]:
    """Smallest and largest numerator ``m`` with ``m / denominator`` inside a bounded interval."""
    if interval.lo is None or interval.hi is None:
        raise EmptyIntervalError("cannot sample from an unbounded interval")
    lo = _floor_bound(interval.lo, denominator)
    while not interval.above_lower(Fraction(lo, denominator)):
        lo += 1
    hi = _ceil_bound(interval.hi, denominator)
    while not interval.below_upper(Fraction(hi, denominator)):
        hi -= 1
    if lo > hi:
        raise EmptyIntervalError(f"no multiple of 1/{denominator} inside {interval.describe()}")
    return lo, hi


def sample_rational(rng: random.Random, interval: Interval, denominator: int = SAMPLE_DENOMINATOR) -> Fraction:
    """Uniform over the multiples of ``1/denominator`` inside ``interval``."""
    lo, hi = grid_range(interval, denominator)
    return Fraction(rng.randint(lo, hi), denominator)


def sampling_window(n: int, x: Exponent, regime: int) -> Interval:
    """Bounded ``rho`` window for a regime.

    The second integer-``x`` regime is unbounded above; it is cut at
    ``rho_hat + (rho_hat - rho_min)``.
    """
    if x == EL1:
        return el1_rho_regimes(n)[regime - 1]
    rho_min, rho_hat = elx_thresholds(n, x)
    if regime == 1:
        return Interval(rho_min, rho_hat, False, True)
    return Interval(rho_hat, 2 * rho_hat - rho_min, False, True)


def sample_params(
    rng: random.Random,
    n: int,
    k: int,
    x: Exponent = EL1,
    regime: int | None = None,
    denominator: int = SAMPLE_DENOMINATOR,
    attempts: int = 64,
) -> ReductionParams:
    """Random valid parameters for graphs of order ``n``.

    ``regime`` picks the ``rho`` regime (1 or 2); ``None`` picks one at
    random. ``tau`` is additionally kept positive.
    """
    for _ in range(attempts):
        reg = regime if regime is not None else rng.choice((1, 2))
        rho = sample_rational(rng, sampling_window(n, x, reg), denominator)
        report = intervals(n, x, rho)
        if not report.nonempty:
            continue
        ti = report.tau_interval
        if ti.lo <= 0:
            ti = Interval(Fraction(0), ti.hi, False, ti.hi_closed)
        try:
            tau = sample_rational(rng, ti, denominator)
        except EmptyIntervalError:
            continue
        if in_validity_region(n, x, tau, rho):
            return ReductionParams(k, tau, rho, x)
    raise EmptyIntervalError(f"no valid parameters found for n = {n}, x = {x!r}, regime = {regime}")


__all__ = [
    "EL1",
    "Certificates",
    "EmptyIntervalError",
    "Interval",
    "IntervalReport",
    "ReductionError",
    "ReductionParams",
    "RobustRectangle",
    "UndecidedError",
    "admissible_x1",
    "build_game",
    "certificates",
    "clique_margin",
    "default_x1",
    "el1_intervals",
    "el1_rho_regimes",
    "elx_intervals",
    "elx_rho_regimes",
    "elx_tau_bounds",
    "elx_thresholds",
    "grid_range",
    "half_width",
    "in_real_region",
    "in_validity_region",
    "intervals",
    "lambda_exponent_between",
    "lambda_value",
    "payoff_partitions",
    "rectangle_width",
    "reduction_failures",
    "reduction_game",
    "robust_rectangle",
    "sample_params",
    "sample_rational",
    "sampling_window",
    "strategy_labels",
]
