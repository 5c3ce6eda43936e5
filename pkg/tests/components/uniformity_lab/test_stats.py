from fractions import Fraction

import pytest

from app.components.uniformity_lab.mature import sample_left_sizes
from app.components.uniformity_lab.stats import chi_square_test, pool_cells, split_law_test


def test_pool_cells_merges_thin_tails():
    obs, exp = pool_cells([1, 2, 300, 400, 3], [1.0, 5.0, 300.0, 390.0, 10.0])
    assert obs == [303, 403]
    assert exp == [306.0, 400.0]
    assert sum(obs) == 706


def test_pool_cells_leaves_healthy_cells():
    assert pool_cells([60, 70, 80], [60.0, 70.0, 80.0]) == ([60, 70, 80], [60.0, 70.0, 80.0])


def test_chi_square_accepts_exact_fit():
    result = chi_square_test([250, 250, 250, 250], [Fraction(1, 4)] * 4, alpha=1e-6)
    assert result.statistic == pytest.approx(0.0)
    assert result.passed
    assert result.dof == 3


def test_chi_square_rejects_skew():
    result = chi_square_test([900, 50, 25, 25], [Fraction(1, 4)] * 4, alpha=1e-6)
    assert not result.passed


def test_split_law_at_ten():
    sizes = sample_left_sizes(10, trials=40000, seed=2024)
    assert len(sizes) == 40000
    assert all(0 <= s <= 9 for s in sizes)
    result = split_law_test(sizes, 10, alpha=1e-6)
    assert result.passed


@pytest.mark.slow
def test_split_law_at_ten_with_a_million_trials():
    sizes = sample_left_sizes(10, trials=1_000_000, seed=7)
    assert split_law_test(sizes, 10, alpha=1e-6).passed
