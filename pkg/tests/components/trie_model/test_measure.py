import pytest

from app.components.probe.models import StringKey
from app.components.trie_model.corpus import random_corpus
from app.components.trie_model.costs import predict_cost
from app.components.trie_model.measure import measure_symbol_cost
from app.components.trie_model.trie import build_trie


def test_two_strings_measure_exactly_two():
    sample = measure_symbol_cost([StringKey.of("ab"), StringKey.of("ac")], trials=10, seed=1)
    assert sample.mean == 2.0
    assert sample.std == 0.0


def test_zero_trials():
    sample = measure_symbol_cost([StringKey.of("ab")], trials=0, seed=1)
    assert (sample.trials, sample.mean, sample.stderr) == (0, 0.0, 0.0)


def test_prediction_matches_quicksort_on_small_corpus():
    keys = random_corpus(8, 6, seed=12)
    prediction = float(predict_cost(build_trie(keys)))
    sample = measure_symbol_cost(keys, trials=20000, seed=3)
    assert abs(sample.mean - prediction) / prediction < 0.03


@pytest.mark.slow
@pytest.mark.parametrize("seed", [1, 2, 3])
def test_prediction_matches_quicksort_many_shuffles(seed):
    keys = random_corpus(8, 6, seed=seed)
    prediction = float(predict_cost(build_trie(keys)))
    sample = measure_symbol_cost(keys, trials=100000, seed=seed)
    assert abs(sample.mean - prediction) / prediction < 0.03
