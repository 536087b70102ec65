from fractions import Fraction

import pytest

from esslab.core import Graph
from esslab.ess import CapExceeded
from esslab.robustness import corner_sample, evaluate_trial, fuzz_reduction, random_game_experiment
from esslab.reduction import robust_rectangle


def test_fuzz_n3_agrees():
    report = fuzz_reduction(3, 3, 50, 7)
    assert report.trials == 50
    assert report.disagreements == []
    assert report.agreements + len(report.disagreements) == report.trials
    assert report.certificate_failures == []


def test_fuzz_samples_inside_rectangle():
    report = fuzz_reduction(4, 3, 20, 1)
    rect = robust_rectangle(4, 3)
    for r in report.records:
        assert r.sample.inside(rect, r.k)


def test_zero_trials():
    report = fuzz_reduction(3, 3, 0, 7)
    assert report.trials == 0 and report.records == []


def test_fuzz_reproducible_and_parallel_invariant():
    a = fuzz_reduction(3, 3, 12, 5).dumps()
    b = fuzz_reduction(3, 3, 12, 5).dumps()
    c = fuzz_reduction(3, 3, 12, 5, workers=2).dumps()
    assert a == b == c


@pytest.mark.parametrize("k", [2, 3])
def test_corner_samples_agree(k):
    rect = robust_rectangle(3, 3)
    for corner in [(True, True, True), (False, False, False), (True, False, True), (False, True, False)]:
        sample = corner_sample(rect, k, *corner)
        assert sample.inside(rect, k)
        for g in (Graph.empty(3), Graph.path(3), Graph.complete(3)):
            assert evaluate_trial(0, g, k, sample).agrees


def test_random_game_experiment_basics():
    assert random_game_experiment([], 10, 1).rows == []
    table = random_game_experiment([1], 5, 1)
    assert table.rows[0].frequency == 1
    with pytest.raises(CapExceeded):
        random_game_experiment([21], 1, 1)


def test_random_game_outputs():
    table = random_game_experiment([2, 3], 20, 11)
    assert table.to_csv().splitlines()[0] == "n,trials,with_ess,frequency"
    assert "frequency" in table.to_text()
    assert all(0 <= r.frequency <= 1 for r in table.rows)
    assert table.to_json() == random_game_experiment([2, 3], 20, 11).to_json()
    assert isinstance(table.rows[0].frequency, Fraction)
