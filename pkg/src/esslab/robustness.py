"""Perturbation fuzzing of the robust reduction and the random-game ESS experiment.

Every trial draws its own generator from ``(seed, index)``, so results do not
depend on the order or the process in which trials run.
"""

from __future__ import annotations

import csv
import io
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .clique import max_clique
from .core import Graph, SymmetricGame, format_rational
from .enclosure import approx
from .ess import CapExceeded, enumeration_cap, ess_enumerate, has_ess
from .reduction import SAMPLE_DENOMINATOR, Interval, RobustRectangle, grid_range, reduction_game, robust_rectangle, sample_rational
from .reduction import certificates as reduction_certificates

PAYOFF_DENOMINATOR = 2**16


def trial_rng(*key: int) -> random.Random:
    """Generator for one trial; string seeding is stable across runs and platforms."""
    return random.Random("/".join(str(k) for k in key))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    """G(n, p) with edges decided in lexicographic order."""
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class PerturbationSample:
    """One value per payoff partition."""

    w_tau: Fraction
    w_rho: Fraction
    w_lambda: Fraction
    seed: int

    def inside(self, rect: RobustRectangle, k: int) -> bool:
        return self.w_tau in rect.tau_interval and self.w_rho in rect.rho_interval and self.w_lambda in rect.lambda_interval(k)

    def to_json(self) -> dict:
        return {
            "w_tau": format_rational(self.w_tau),
            "w_rho": format_rational(self.w_rho),
            "w_lambda": format_rational(self.w_lambda),
            "seed": self.seed,
        }


def draw_sample(rng: random.Random, rect: RobustRectangle, k: int, seed: int) -> PerturbationSample:
    return PerturbationSample(
        sample_rational(rng, rect.tau_interval),
        sample_rational(rng, rect.rho_interval),
        sample_rational(rng, rect.lambda_interval(k)),
        seed,
    )


def _edge_value(interval: Interval, low_end: bool) -> Fraction:
    """Grid point nearest to one end; equals the end itself when it is closed and on the grid."""
    if low_end and interval.lo_closed and isinstance(interval.lo, Fraction) and interval.lo in interval:
        return interval.lo
    if not low_end and interval.hi_closed and isinstance(interval.hi, Fraction) and interval.hi in interval:
        return interval.hi
    lo, hi = grid_range(interval)
    return Fraction(lo if low_end else hi, SAMPLE_DENOMINATOR)


def corner_sample(rect: RobustRectangle, k: int, tau_low: bool = True, rho_low: bool = True, lam_low: bool = True) -> PerturbationSample:
    """A sample pushed to one corner of the rectangle."""
    return PerturbationSample(
        _edge_value(rect.tau_interval, tau_low),
        _edge_value(rect.rho_interval, rho_low),
        _edge_value(rect.lambda_interval(k), lam_low),
        -1,
    )


@dataclass(frozen=True)
class TrialRecord:
    index: int
    graph: Graph
    k: int
    clique_number: int
    sample: PerturbationSample
    ess_exists: bool
    expected: bool
    ess_margin: Fraction | None
    clique_margin_k: Fraction | None
    certificate_holds: bool

    @property
    def agrees(self) -> bool:
        return self.ess_exists == self.expected

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges],
            "k": self.k,
            "clique_number": self.clique_number,
            "sample": self.sample.to_json(),
            "ess_exists": self.ess_exists,
            "expected": self.expected,
            "agrees": self.agrees,
            "ess_margin": None if self.ess_margin is None else format_rational(self.ess_margin),
            "clique_margin_k": None if self.clique_margin_k is None else format_rational(self.clique_margin_k),
            "certificate_holds": self.certificate_holds,
        }


def evaluate_trial(index: int, g: Graph, k: int, sample: PerturbationSample) -> TrialRecord:
    """Decide ESS existence on the perturbed game and compare it with the clique answer."""
    game = reduction_game(g, sample.w_tau, sample.w_rho, sample.w_lambda)
    exists = has_ess(game)
    d = max_clique(g).max_clique_size
    cert = reduction_certificates(sample.w_tau, sample.w_rho, sample.w_lambda, k, d)
    return TrialRecord(index, g, k, d, sample, exists, d < k, cert.ess_margin, cert.clique_margin_k, cert.holds)


@dataclass
class FuzzReport:
    n: int
    x0: int
    x1: Fraction
    A: Fraction
    seed: int
    records: list[TrialRecord] = field(default_factory=list)

    @property
    def trials(self) -> int:
        return len(self.records)

    @property
    def agreements(self) -> int:
        return sum(r.agrees for r in self.records)

    @property
    def disagreements(self) -> list[TrialRecord]:
        return [r for r in self.records if not r.agrees]

    @property
    def certificate_failures(self) -> list[TrialRecord]:
        return [r for r in self.records if not r.certificate_holds]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "x0": self.x0,
            "x1": format_rational(self.x1),
            "A": format_rational(self.A),
            "seed": self.seed,
            "trials": self.trials,
            "agreements": self.agreements,
            "disagreements": [r.to_json() for r in self.disagreements],
            "records": [r.to_json() for r in self.records],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        head = f"{'trial':>5}  {'k':>2}  {'d':>2}  {'w_tau':>10}  {'w_rho':>10}  {'w_lambda':>10}  {'ess':>5}  {'agree':>5}"
        lines = [f"fuzz n={self.n} x0={self.x0} x1={format_rational(self.x1)} seed={self.seed}", head]
        for r in self.records:
            s = r.sample
            lines.append(
                f"{r.index:>5}  {r.k:>2}  {r.clique_number:>2}  {approx(s.w_tau):>10.6f}  {approx(s.w_rho):>10.6f}"
                f"  {approx(s.w_lambda):>10.6f}  {str(r.ess_exists):>5}  {str(r.agrees):>5}"
            )
        lines.append(f"agreements {self.agreements}/{self.trials}, disagreements {len(self.disagreements)}")
        return "\n".join(lines)


def _fuzz_one(args: tuple[int, RobustRectangle, int]) -> TrialRecord:
    seed, rect, index = args
    rng = trial_rng(seed, index)
    g = random_graph(rng, rect.n)
    k = rng.randint(2, rect.n)
    sample = draw_sample(rng, rect, k, seed)
    return evaluate_trial(index, g, k, sample)


def fuzz_reduction(n: int, x0: int = 3, trials: int = 200, seed: int = 0, workers: int = 1) -> FuzzReport:
    """Random graphs, random ``k`` and random partition values from the robust rectangle.

    Each trial checks that the perturbed game has an ESS exactly when the
    graph has no ``k``-clique.
    """
    if trials < 0:
        raise ValueError("trials must be non-negative")
    rect = robust_rectangle(n, x0)
    report = FuzzReport(n, x0, rect.x1, rect.A, seed)
    jobs = [(seed, rect, i) for i in range(trials)]
    if workers > 1 and trials > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            report.records = list(pool.map(_fuzz_one, jobs, chunksize=8))
    else:
        report.records = [_fuzz_one(j) for j in jobs]
    return report


# --------------------------------------------------------------------------
# Random games
# --------------------------------------------------------------------------


def random_game(rng: random.Random, n: int, denominator: int = PAYOFF_DENOMINATOR) -> SymmetricGame:
    """I.i.d. uniform payoffs on the grid ``{0, 1/den, ..., 1}``."""
    rows = [[Fraction(rng.randint(0, denominator), denominator) for _ in range(n)] for _ in range(n)]
    return SymmetricGame.from_rows(rows)


def has_small_ess(game: SymmetricGame, max_support: int = 2) -> bool:
    return any(v.is_ess for v in ess_enumerate(game, first_only=True, max_support=max_support))


@dataclass(frozen=True)
class FrequencyRow:
    n: int
    trials: int
    with_ess: int

    @property
    def frequency(self) -> Fraction:
        return Fraction(self.with_ess, self.trials) if self.trials else Fraction(0)


@dataclass
class FrequencyTable:
    seed: int
    trials: int
    rows: list[FrequencyRow] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "rows": [
                {
                    "n": r.n,
                    "trials": r.trials,
                    "with_ess": r.with_ess,
                    "frequency": format_rational(r.frequency),
                    "frequency_approx": approx(r.frequency),
                }
                for r in self.rows
            ],
        }

    def to_text(self) -> str:
        lines = [f"{'n':>4}  {'trials':>6}  {'with ESS':>8}  {'frequency':>9}"]
        for r in self.rows:
            lines.append(f"{r.n:>4}  {r.trials:>6}  {r.with_ess:>8}  {approx(r.frequency):>9.4f}")
        return "\n".join(lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "trials", "with_ess", "frequency"])
        for r in self.rows:
            writer.writerow([r.n, r.trials, r.with_ess, f"{approx(r.frequency):.6f}"])
        return buf.getvalue()


def _experiment_one(args: tuple[int, int, int]) -> bool:
    seed, n, index = args
    return has_small_ess(random_game(trial_rng(seed, n, index), n))


def random_game_experiment(sizes: Sequence[int], trials: int, seed: int = 0, workers: int = 1) -> FrequencyTable:
    """Fraction of random games that have an ESS supported on at most two strategies."""
    cap = enumeration_cap()
    for n in sizes:
        if n < 1:
            raise ValueError(f"game size must be positive, got {n}")
        if n > cap:
            raise CapExceeded(f"game size {n} exceeds the enumeration cap {cap}")
    table = FrequencyTable(seed, trials)
    for n in sizes:
        jobs = [(seed, n, i) for i in range(trials)]
        if workers > 1 and trials > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                hits = list(pool.map(_experiment_one, jobs, chunksize=16))
        else:
            hits = [_experiment_one(j) for j in jobs]
        table.rows.append(FrequencyRow(n, trials, sum(hits)))
    return table


__all__ = [
    "FrequencyRow",
    "FrequencyTable",
    "FuzzReport",
    "PerturbationSample",
    "TrialRecord",
    "corner_sample",
    "draw_sample",
    "evaluate_trial",
    "fuzz_reduction",
    "has_small_ess",
    "random_game",
    "random_game_experiment",
    "random_graph",
    "trial_rng",
]
