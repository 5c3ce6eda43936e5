import math

import pytest

from app.components.base.exceptions import CensusCapExceededError
from app.components.combinatorics.counts import binomial_queue_count, heap_count
from app.components.heap_core.models import HeapArray
from app.components.probe.models import keys_from_ranks
from app.components.uniformity_lab.census import (
    census_binomial_build,
    census_binomial_popmax,
    census_buildheap,
    expected_heap_multiplicity,
    first_difference,
)


def test_buildheap_three():
    census = census_buildheap(3)
    assert census.counts == {"2,1,0": 3, "2,0,1": 3}
    assert census.is_uniform and census.total == 6


def test_buildheap_four():
    census = census_buildheap(4)
    assert census.distinct == 3
    assert set(census.counts.values()) == {8}


@pytest.mark.parametrize("n", range(8))
def test_buildheap_uniform_with_multiplicity(n):
    census = census_buildheap(n)
    multiplicity = expected_heap_multiplicity(n, heap_count(n))
    assert multiplicity * heap_count(n) == math.factorial(n)
    assert census.distinct == heap_count(n)
    assert first_difference(census, multiplicity) is None


def test_census_keys_are_heaps():
    for structure in census_buildheap(5).counts:
        ranks = [int(part) for part in structure.split(",")]
        assert HeapArray.from_keys(keys_from_ranks(ranks)).is_heap()


def test_parallel_census_matches_serial():
    assert census_buildheap(6, jobs=2).counts == census_buildheap(6).counts


@pytest.mark.slow
@pytest.mark.parametrize("n", [8, 9])
def test_buildheap_uniform_large(n):
    census = census_buildheap(n, jobs=2)
    multiplicity = expected_heap_multiplicity(n, heap_count(n))
    assert multiplicity > 0
    assert first_difference(census, multiplicity) is None


def test_cap_refused():
    with pytest.raises(CensusCapExceededError):
        census_buildheap(10)
    with pytest.raises(CensusCapExceededError):
        census_binomial_build(7)


def test_binomial_build_three():
    census = census_binomial_build(3)
    assert census.distinct == 3
    assert set(census.counts.values()) == {2}


def test_binomial_build_one():
    census = census_binomial_build(1)
    assert census.counts == {"(0)": 1}


@pytest.mark.parametrize("n", range(1, 7))
def test_binomial_build_configurations(n):
    census = census_binomial_build(n)
    assert census.distinct == binomial_queue_count(n)
    assert census.total == math.factorial(n)
    assert census.is_uniform


@pytest.mark.parametrize("n", [2, 3, 4])
def test_pop_preserves_uniformity_small(n):
    result = census_binomial_popmax(n)
    assert result.preserves_uniformity
    assert result.expected == binomial_queue_count(n - 1)


def test_pop_census_two_gives_singleton():
    result = census_binomial_popmax(2)
    assert result.census.counts == {"(0)": 1}


def test_pop_census_reports_ratio():
    result = census_binomial_popmax(5)
    assert result.census.ratio >= 1
    assert result.missing >= 0
    assert result.census.summary()["ratio"] == str(result.census.ratio)


def test_multiplicity_sentinel():
    assert expected_heap_multiplicity(4, 3) == 8
    assert expected_heap_multiplicity(4, 5) == -1
