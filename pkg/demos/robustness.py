"""The robust rectangle, perturbation fuzzing and the random-game experiment.

Run: python demos/robustness.py
"""

from esslab import fuzz_reduction, random_game_experiment, robust_rectangle

for n in (3, 4, 5):
    rect = robust_rectangle(n, 3)
    print(f"n={n}: x1={rect.x1}, tau in {rect.tau_interval.describe()}, rho in {rect.rho_interval.describe()}")
    report = fuzz_reduction(n, 3, trials=40, seed=7)
    print(f"  fuzzing: {report.agreements}/{report.trials} trials agree with the clique answer")
    for r in report.disagreements:
        print(f"  disagreement: k={r.k}, clique number {r.clique_number}, ESS exists {r.ess_exists}")

print()
print("share of random games with an ESS on at most two strategies")
print(random_game_experiment([2, 4, 6], trials=50, seed=11).to_text())
