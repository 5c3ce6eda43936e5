from fractions import Fraction

import pytest

from app.components.base.exceptions import DomainError
from app.components.combinatorics.splits import (
    alt_model_split,
    crossing_window,
    normalization_failures,
    preservation_identity_holds,
    split_probability_P,
    split_probability_T,
)


def test_p_with_no_red_keys():
    assert split_probability_P(5, 0, 0) == 1


def test_p_out_of_range_is_zero():
    assert split_probability_P(2, 3, 4) == 0
    assert split_probability_P(2, 6, 1) == 0
    assert split_probability_T(3, -1) == 0


def test_normalization_exact():
    assert normalization_failures(50) == []


def test_crossing_window_is_centered():
    for m in range(51):
        for r in range(min(2 * m + 1, 20) + 1):
            report = crossing_window(m, r)
            assert report.holds, (m, r)
            assert report.delta <= r / 2 + 1


def test_crossing_rejects_oversized_r():
    with pytest.raises(DomainError):
        crossing_window(2, 6)


def test_alt_split_examples():
    assert [alt_model_split(2, k) for k in range(2)] == [Fraction(1, 2), Fraction(1, 2)]
    assert alt_model_split(4, 1) == Fraction(3, 8)
    assert sum(alt_model_split(9, k) for k in range(9)) == 1
    with pytest.raises(DomainError):
        alt_model_split(4, 4)


def test_preservation_identity():
    assert all(preservation_identity_holds(N) for N in range(1, 65))
