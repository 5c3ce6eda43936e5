from pathlib import Path

import pytest

from app.components.base.exceptions import ExperimentConfigError
from app.components.experiments.models import ALGORITHMS, build_config
from app.components.experiments.runner import (
    binomial_bound_line,
    heapsort_envelope,
    run_adversarial_experiment,
    run_buildphase_experiment,
    run_experiment,
    run_rootlist_experiment,
    run_trial,
)
from app.components.probe.models import TallySheet


def test_single_key_costs_nothing():
    result = run_experiment(build_config(algo="floyd", n=1, r=1, trials=1))
    assert result.failures == 0
    assert result.points[0]["mean_total"] == 0.0
    assert result.fit is None


@pytest.mark.parametrize("algo", ALGORITHMS)
def test_every_algorithm_sorts(algo):
    result = run_experiment(build_config(algo=algo, n=40, r=10, trials=3, seed=5))
    assert result.failures == 0
    assert result.points[0]["r"] == 10
    assert result.points[0]["lo"] == 30


def test_trial_is_pure():
    task = ("binomial", 30, 8, 22, 1234)
    assert run_trial(task).sheet.rows(1234, 30, 8, 22, "binomial") == run_trial(task).sheet.rows(1234, 30, 8, 22, "binomial")


def test_rows_do_not_depend_on_jobs():
    serial = run_experiment(build_config(algo="modified", n=50, r=10, trials=8, seed=3))
    parallel = run_experiment(build_config(algo="modified", n=50, r=10, trials=8, seed=3, jobs=2))
    assert serial.rows == parallel.rows
    assert serial.points == parallel.points


def test_sweep_produces_fit():
    result = run_experiment(build_config(algo="modified", n=64, r=4, r_sweep=[4, 8, 16], trials=10))
    assert [p["r"] for p in result.points] == [4, 8, 16]
    assert result.fit is not None
    assert result.fit.rs == [4, 8, 16]


def test_output_files_repeat_byte_for_byte(tmp_path):
    paths = []
    for name in ("a", "b"):
        out = tmp_path / name / "results.csv"
        run_experiment(build_config(algo="floyd", n=30, r=6, trials=4, out=str(out)))
        paths.append(out)
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert paths[0].read_text().splitlines()[0] == ",".join(TallySheet.CSV_COLUMNS)
    assert (tmp_path / "a" / "results_summary.csv").read_bytes() == (tmp_path / "b" / "results_summary.csv").read_bytes()


def test_envelope_and_bound_line():
    assert heapsort_envelope(1) == (0.0, 2.0)
    low, high = heapsort_envelope(8)
    assert (low, high) == (8.0, 64.0)
    assert binomial_bound_line(0) == 0.0
    assert binomial_bound_line(1) == 8.0


def test_binomial_build_never_exceeds_r():
    cfg = build_config(algo="binomial", n=64, r=0, n_sweep=[31, 64], r_ratio=0.25, trials=30)
    report = run_buildphase_experiment(cfg)
    assert [p["r"] for p in report.points] == [8, 16]
    assert report.bound_violations == 0


def test_floyd_build_ratio():
    cfg = build_config(algo="floyd", n=511, r=0, n_sweep=[255, 511], r_ratio=0.25, trials=20)
    assert run_buildphase_experiment(cfg).max_ratio <= 4.0


def test_quicksort_has_no_build_phase():
    with pytest.raises(ExperimentConfigError):
        run_buildphase_experiment(build_config(algo="quicksort-strings", n=10, r=2))


def test_root_list_all_red_is_popcount():
    (point,) = run_rootlist_experiment(build_config(algo="binomial", n=11, r=11, trials=5))
    assert point.mean == 3.0
    assert point.expected == 3.0
    assert point.within_three_sigma
    assert point.build_bound_holds


def test_root_list_no_red():
    (point,) = run_rootlist_experiment(build_config(algo="binomial", n=12, r=0, trials=3))
    assert point.mean == 0.0
    assert point.drift is None and point.popmax_bound is None
    assert point.within_drift


def test_root_list_matches_expectation():
    (point,) = run_rootlist_experiment(build_config(algo="binomial", n=32, r=8, trials=2000, seed=17))
    assert point.within_three_sigma
    assert point.within_drift
    assert sum(point.histogram.values()) == 2000


def test_root_list_rejects_offset():
    with pytest.raises(ExperimentConfigError):
        run_rootlist_experiment(build_config(algo="binomial", n=10, r=3, lo=0, trials=2))


def test_root_list_csv(tmp_path):
    out = tmp_path / "roots.csv"
    run_rootlist_experiment(build_config(algo="binomial", n=16, r=4, r_sweep=[4, 8], trials=10, out=str(out)))
    assert len(out.read_text().splitlines()) == 3


def test_adversarial_growth():
    report = run_adversarial_experiment(range(4, 11))
    assert [p["r"] for p in report.points] == [7, 9, 11, 13, 15, 17, 19]
    assert [p["red_red"] for p in report.points] == [10, 15, 21, 28, 36, 45, 55]
    assert report.matches_closed_form
    # quadratic in r, but the linear term keeps the global fit under 1.8
    assert 1.65 < report.exponent < 1.8
    assert report.quadratic_coefficient > 0


def test_adversarial_needs_two_points():
    with pytest.raises(ExperimentConfigError):
        run_adversarial_experiment([4])


@pytest.mark.slow
@pytest.mark.parametrize(
    "algo,band",
    [("modified", (0.8, 1.2)), ("binomial", (1.1, 1.7))],
)
def test_fitted_constant_band(algo, band):
    cfg = build_config(algo=algo, n=4095, r=32, r_sweep=[32, 64, 128, 256, 512, 1024], trials=40, jobs=2)
    result = run_experiment(cfg)
    assert result.failures == 0
    assert band[0] <= result.fit.c_hat <= band[1]


@pytest.mark.slow
def test_build_phase_ratio_over_sizes():
    cfg = build_config(
        algo="floyd", n=16383, r=0, n_sweep=[255, 1023, 4095, 16383], r_ratio=0.25, trials=30, jobs=2
    )
    assert run_buildphase_experiment(cfg).max_ratio <= 4.0


@pytest.mark.slow
@pytest.mark.parametrize("r", [16, 64, 256])
def test_root_list_acceptance(r):
    (point,) = run_rootlist_experiment(build_config(algo="binomial", n=1024, r=r, trials=3000, jobs=2))
    assert point.within_three_sigma
    assert point.within_drift
    assert point.build_bound_holds
