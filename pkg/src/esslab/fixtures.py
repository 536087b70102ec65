"""Small named games used by the demos, the CLI and the tests."""

from __future__ import annotations

from fractions import Fraction

from .core import SymmetricGame


def crab_game() -> SymmetricGame:
    """Two crab sizes competing for food; Large is the only ESS."""
    return SymmetricGame.from_rows([[7, 1], [9, 4]], ("Small", "Large"))


def rock_paper_scissors() -> SymmetricGame:
    """Win 1, loss -1, tie 0; the uniform equilibrium is not evolutionarily stable."""
    return SymmetricGame.from_rows(
        [[0, -1, 1], [1, 0, -1], [-1, 1, 0]],
        ("Rock", "Paper", "Scissors"),
    )


def hawk_dove(value: int = 2, cost: int = 4) -> SymmetricGame:
    """Hawk-Dove with resource ``value`` and fight ``cost``; mixed ESS at ``value/cost`` hawks when cost exceeds value."""
    v, c = Fraction(value), Fraction(cost)
    return SymmetricGame.from_rows([[(v - c) / 2, v], [0, v / 2]], ("Hawk", "Dove"))


FIXTURES = {
    "crab": crab_game,
    "rps": rock_paper_scissors,
    "hawk-dove": hawk_dove,
}
