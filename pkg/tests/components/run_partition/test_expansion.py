import math

import pytest

from app.components.base.exceptions import DomainError
from app.components.run_partition.expansion import almost_binary_expansion, expansion_candidates, is_valid_expansion


@pytest.mark.parametrize(
    "n, terms",
    [(0, ()), (1, (1,)), (2, (1, 1)), (6, (2, 2)), (10, (3, 2)), (100, (6, 5, 2, 2))],
)
def test_examples(n, terms):
    expansion = almost_binary_expansion(n)
    assert expansion.terms == terms
    assert expansion.total == n


def test_negative_rejected():
    with pytest.raises(DomainError) as info:
        almost_binary_expansion(-1)
    assert info.value.details == {"n": -1}


def test_greedy_is_the_unique_tail_dominant_expansion():
    for n in range(1, 513):
        candidates = expansion_candidates(n, "tail")
        greedy = almost_binary_expansion(n).terms
        assert candidates == [greedy], n
        assert is_valid_expansion(greedy, n, "tail")


def test_head_reading_disagrees_with_sorter():
    assert is_valid_expansion((2, 2), 6, "head")
    assert not is_valid_expansion((3, 2), 10, "head")
    assert expansion_candidates(10, "head") != expansion_candidates(10, "tail")


def test_validity_rules():
    assert not is_valid_expansion((1, 2), 4)  # increasing
    assert not is_valid_expansion((1, 1, 1), 3)  # equal pair before the last place
    assert not is_valid_expansion((2, 1), 5)  # wrong total


def _term_bound(n: int) -> int:
    return math.ceil(math.log2(n)) + math.ceil(math.log2(math.log2(n))) + 3


def test_round_trip_and_term_count():
    for n in range(2, 20001):
        expansion = almost_binary_expansion(n)
        assert expansion.total == n
        assert len(expansion) <= _term_bound(n)


@pytest.mark.slow
def test_round_trip_and_term_count_to_a_million():
    for n in range(20001, 10**6 + 1):
        expansion = almost_binary_expansion(n)
        assert expansion.total == n
        assert len(expansion) <= _term_bound(n)
