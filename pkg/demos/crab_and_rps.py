"""Two small games: one with a strict ESS, one with none.

Run: python demos/crab_and_rps.py
"""

from esslab import MixedStrategy, check_ess, ess_enumerate, invasion_threshold
from esslab.fixtures import crab_game, hawk_dove, rock_paper_scissors


def show(name, game):
    print(f"== {name}")
    for row, label in zip(game.payoff, game.labels):
        print(f"  {label:>8}: " + "  ".join(str(v) for v in row))
    verdicts = ess_enumerate(game, include_non_ess=True)
    for v in verdicts:
        kind = "ESS" if v.is_ess else "equilibrium, not stable"
        print(f"  {v.strategy.describe(game.labels)}: {kind}")
        if v.counterexample is not None:
            print(f"    invaded by {v.counterexample.describe(game.labels)}")
    print()


crab = crab_game()
show("crab sizes", crab)
large, small = crab.pure("Large"), crab.pure("Small")
print(f"  Large repels Small up to a share of {invasion_threshold(crab, large, small).threshold}")
print(f"  Small as incumbent: {check_ess(crab, small).is_ess}")
print()

show("rock-paper-scissors", rock_paper_scissors())

hd = hawk_dove()
show("hawk-dove (value 2, cost 4)", hd)
mixed = MixedStrategy.uniform(2)
print(f"  the half-half mix beats an all-Hawk mutant up to a share of {invasion_threshold(hd, mixed, hd.pure('Hawk')).threshold}")
