"""Clique number by binary search over an ESS-existence oracle.

Each probe builds a reduction game for ``k = mid`` and asks whether it has an
ESS. "Yes" means the graph has no ``mid``-clique.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .core import Graph, SymmetricGame
from .ess import has_ess
from .reduction import EL1, EmptyIntervalError, Exponent, ReductionParams, build_game, sample_params

CONSERVATIVE = "conservative"
ADAPTIVE = "adaptive"


@dataclass(frozen=True)
class SearchStep:
    low: int
    high: int
    mid: int
    ess_exists: bool

    @property
    def answer(self) -> str:
        return "yes" if self.ess_exists else "no"


@dataclass
class SearchTrace:
    steps: list[SearchStep] = field(default_factory=list)
    params_used: list[ReductionParams] = field(default_factory=list)
    result: int = 0
    seed: int = 0
    interval_mode: str = CONSERVATIVE

    @property
    def oracle_calls(self) -> int:
        return len(self.steps)

    def to_json(self) -> dict:
        return {
            "result": self.result,
            "oracle_calls": self.oracle_calls,
            "interval_mode": self.interval_mode,
            "seed": self.seed,
            "steps": [
                {"min": s.low, "max": s.high, "mid": s.mid, "answer": s.answer, "params": p.to_json()}
                for s, p in zip(self.steps, self.params_used)
            ],
        }


def dec_ess(game: SymmetricGame) -> bool:
    """Does the game have at least one ESS?"""
    return has_ess(game)


def call_bound(n: int) -> int:
    """``ceil(log2 n)``, the most oracle calls a search on ``n`` vertices makes."""
    return 0 if n <= 1 else (n - 1).bit_length()


def binary_clique_search(
    g: Graph,
    x: Exponent = EL1,
    interval_mode: str = CONSERVATIVE,
    seed: int = 0,
    oracle=dec_ess,
) -> SearchTrace:
    """Clique number of ``g`` using only ESS-existence answers.

    Parameters for each probe are sampled from the valid region for order
    ``n`` (conservative) or for the current upper bound ``max`` (adaptive).
    The sampler is seeded, so a trace is reproducible.
    """
    if interval_mode not in (CONSERVATIVE, ADAPTIVE):
        raise ValueError(f"interval_mode must be {CONSERVATIVE!r} or {ADAPTIVE!r}")
    rng = random.Random(seed)
    trace = SearchTrace(seed=seed, interval_mode=interval_mode)
    low, high = 1, g.n
    while low < high:
        mid = (low + high + 1) // 2
        order = g.n if interval_mode == CONSERVATIVE else high
        try:
            params = sample_params(rng, order, mid, x)
        except EmptyIntervalError as exc:
            raise EmptyIntervalError(f"cannot sample parameters for order {order}, x = {x!r}: {exc}") from exc
        exists = oracle(build_game(g, params))
        trace.steps.append(SearchStep(low, high, mid, exists))
        trace.params_used.append(params)
        if exists:
            high = mid - 1
        else:
            low = mid
    trace.result = low
    return trace


__all__ = [
    "ADAPTIVE",
    "CONSERVATIVE",
    "SearchStep",
    "SearchTrace",
    "binary_clique_search",
    "call_bound",
    "dec_ess",
]
