"""Deciding cliques through ESS existence, then binary search for the clique number.

Run: python demos/clique_via_ess.py
"""

import random

from esslab import EL1, Graph, binary_clique_search, build_game, ess_enumerate, max_clique
from esslab.reduction import el1_intervals, sample_params

g = Graph.from_edges(5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5)])
d = max_clique(g).max_clique_size
print(f"graph on {g.n} vertices, clique number {d}")

report = el1_intervals(g.n)
print("rho regimes:", ", ".join(r.describe() for r in report.regime_intervals))

rng = random.Random(1)
for k in range(2, g.n + 1):
    params = sample_params(rng, g.n, k, EL1)
    game = build_game(g, params)
    stable = [v.strategy.describe(game.labels) for v in ess_enumerate(game)]
    answer = "no ESS" if not stable else f"ESS {stable}"
    print(f"  k={k}: tau={float(params.tau):.4f} rho={float(params.rho):.4f} -> {answer}; has a {k}-clique: {d >= k}")

trace = binary_clique_search(g, seed=3)
print(f"binary search: clique number {trace.result} after {trace.oracle_calls} oracle calls")
for step in trace.steps:
    print(f"  range [{step.low}, {step.high}], probe k={step.mid}: ESS exists {step.answer}")
