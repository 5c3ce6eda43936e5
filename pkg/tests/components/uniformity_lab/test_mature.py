import math

import pytest

from app.components.combinatorics.recurrences import c_recurrence
from app.components.uniformity_lab.mature import mature_phase_census


def test_two_keys_cost_nothing():
    report = mature_phase_census(2, trials=20, seed=5)
    assert report.first_pop_mean == 0.0
    assert report.total_max == 0
    assert report.within_bound


def test_first_pop_tracks_recurrence():
    report = mature_phase_census(16, trials=2000, seed=11)
    assert report.first_pop_expected == pytest.approx(float(c_recurrence(16, "exact")))
    assert report.first_pop_relative_error < 0.1


def test_total_stays_under_bound():
    report = mature_phase_census(32, trials=300, seed=3)
    assert report.within_bound
    assert report.total_mean <= report.total_max
    assert report.to_dict()["per_pop_mean"] == pytest.approx(report.total_mean / 32)


def test_zero_trials_report():
    report = mature_phase_census(8, trials=0, seed=1)
    assert (report.first_pop_mean, report.total_mean, report.total_max) == (0.0, 0.0, 0)


@pytest.mark.slow
@pytest.mark.parametrize("N,trials", [(2**6, 200), (2**8, 50), (2**10, 10), (2**12, 2)])
def test_total_stays_under_bound_as_heaps_grow(N, trials):
    report = mature_phase_census(N, trials=trials, seed=N)
    assert report.bound == pytest.approx(N * math.log2(N) + 4 * N)
    assert report.within_bound, report.to_dict()
