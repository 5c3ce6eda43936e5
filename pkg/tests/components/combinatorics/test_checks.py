import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from app.components.base.exceptions import DomainError, InvalidDistributionError
from app.components.combinatorics.checks import (
    appendix_sum_bound_check,
    drift_bound,
    g_concavity_check,
    g_ratio_check,
    h_residual_check,
    popmax_bound,
    root_red_expectation,
    ScanLengthReport,
    scan_length_bound,
)


def test_g_concavity_up_to_ten_thousand():
    report = g_concavity_check(10000)
    assert report.passed
    assert report.checked == 9999
    assert report.details["min_second_difference"] > 0


def test_g_concavity_needs_two():
    with pytest.raises(DomainError):
        g_concavity_check(1)


def test_g_ratio_band():
    assert g_ratio_check().passed


def test_h_residual_check_reports_range():
    report = h_residual_check(5000)
    assert report.passed
    assert report.details["residual_max"] <= 2.0


def test_appendix_bound_from_sixteen():
    assert appendix_sum_bound_check(16).passed
    report = appendix_sum_bound_check(100000)
    assert report.passed
    assert report.details["integral_relative_error"] < 0.01
    with pytest.raises(DomainError):
        appendix_sum_bound_check(2)


def test_drift_bound():
    assert drift_bound(1) == 2
    assert drift_bound(math.e) == pytest.approx(4)
    with pytest.raises(DomainError):
        drift_bound(0.5)


def test_scan_length_examples():
    report = scan_length_bound([1])
    assert report.expected == 1 and report.upper == 1
    assert report.within_two


def test_scan_length_geometric_boundary():
    p = [Fraction(1, 2) + Fraction(1, 2**30)] + [Fraction(1, 2**i) for i in range(2, 31)]
    report = scan_length_bound(p)
    assert report.admissible
    assert report.upper < 2
    assert report.upper > 2 - Fraction(1, 2**20)
    assert report.within_upper


@given(st.lists(st.integers(min_value=1, max_value=50), min_size=1, max_size=10))
def test_admissible_vectors_stay_within_two(weights):
    # halving from each weight to the next keeps p_i >= 2 p_(i+1)
    raw = [weights[0]]
    for w in weights[1:]:
        raw.append(Fraction(raw[-1], 2 + w))
    total = sum(raw)
    p = [Fraction(x) / total for x in raw]
    report = scan_length_bound(p)
    assert report.admissible
    assert report.within_upper
    assert report.within_two
    assert report.passed


def test_scan_length_rejects_bad_vectors():
    with pytest.raises(InvalidDistributionError):
        scan_length_bound([])
    with pytest.raises(InvalidDistributionError):
        scan_length_bound([Fraction(1, 2), Fraction(1, 4)])
    with pytest.raises(InvalidDistributionError):
        scan_length_bound([1.2, -0.2])
    assert scan_length_bound([0.5, 0.5]).within_two is None
    assert scan_length_bound([0.5, 0.5]).passed


def test_scan_report_fails_past_two_when_admissible():
    assert not ScanLengthReport(expected=1, upper=Fraction(5, 2), admissible=True).passed
    assert ScanLengthReport(expected=1, upper=Fraction(5, 2), admissible=False).passed
    assert not ScanLengthReport(expected=3, upper=2, admissible=False).passed


def test_root_red_expectation_edges():
    assert root_red_expectation(11, 11) == 3
    assert root_red_expectation(11, 0) == 0
    assert root_red_expectation(0, 0) == 0
    with pytest.raises(DomainError):
        root_red_expectation(4, 5)


def test_root_red_expectation_single_tree():
    # n = 4: one tree, its root is red whenever any red key exists
    assert root_red_expectation(4, 1) == 1
    # n = 5: the singleton is red with probability 1/5, the 4-tree otherwise
    assert root_red_expectation(5, 1) == 1
    assert root_red_expectation(5, 2) == Fraction(7, 5)


def test_popmax_bound():
    assert popmax_bound(1, 1) == 2 * root_red_expectation(1, 1) - root_red_expectation(0, 0)
    with pytest.raises(DomainError):
        popmax_bound(3, 0)
