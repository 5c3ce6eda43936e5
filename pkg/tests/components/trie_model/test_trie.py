from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from app.components.base.exceptions import CorpusError
from app.components.probe.models import StringKey
from app.components.trie_model.costs import nlogn_cost, predict_cost, quicksort_cost
from app.components.trie_model.trie import PrefixTrie, build_trie, reduced_trie


def keys(*words: str) -> list[StringKey]:
    return [StringKey.of(w) for w in words]


def test_two_strings():
    trie = build_trie(keys("ab", "ac"))
    assert {node.prefix: node.thickness for node in trie} == {b"": 2, b"a": 2, b"ab": 1, b"ac": 1}
    assert trie.thickness(b"zz") == 0
    assert [leaf.prefix for leaf in trie.leaves()] == [b"ab", b"ac"]


def test_single_string():
    trie = build_trie(keys("x"))
    assert len(trie) == 2
    assert trie.thickness_vector() == [1, 1]
    assert len(reduced_trie(trie)) == 0


def test_prefix_string_is_inner_node():
    trie = build_trie(keys("a", "ab"))
    assert not trie.nodes[b"a"].is_leaf
    assert trie.thickness(b"a") == 2


def test_duplicates_rejected():
    with pytest.raises(CorpusError):
        build_trie(keys("ab", "ab"))


def test_reduced_trie_keeps_shared_spine():
    assert set(reduced_trie(build_trie(keys("ab", "ac"))).nodes) == {b"", b"a"}
    spine = reduced_trie(build_trie(keys("abcx", "abcy", "abcz")))
    assert set(spine.nodes) == {b"", b"a", b"ab", b"abc"}
    assert spine.nodes[b"abc"].is_leaf


def test_prediction_examples():
    trie = build_trie(keys("ab", "ac"))
    assert quicksort_cost(2) == 1
    assert predict_cost(trie) == 2
    assert predict_cost(trie, lambda n: 0) == 0
    assert predict_cost(trie, nlogn_cost) == pytest.approx(4.0)


def test_quicksort_cost_values():
    assert quicksort_cost(0) == 0
    assert quicksort_cost(1) == 0
    assert quicksort_cost(6) == Fraction(103, 10)


def test_frames():
    trie = build_trie(keys("ab", "ac", "b"))
    frame = trie.to_frame()
    assert list(frame.columns) == ["prefix_length", "thickness"]
    assert frame.iloc[0].tolist() == [0, 3]
    histogram = trie.histogram()
    assert histogram["nodes"].sum() == len(trie)


words = st.lists(st.binary(min_size=1, max_size=6), min_size=1, max_size=12, unique=True)


@given(words)
def test_thickness_invariants(data):
    trie = build_trie([StringKey(w) for w in data])
    assert trie.thickness(PrefixTrie.ROOT) == len(data)
    for node in trie:
        for child in node.children.values():
            assert trie.thickness(child) <= node.thickness
    full_length = [trie.thickness(w) for w in data]
    assert all(t >= 1 for t in full_length)


@given(words, st.binary(min_size=1, max_size=6))
def test_adding_a_string_never_lowers_prediction(data, extra):
    if extra in data:
        return
    before = predict_cost(build_trie([StringKey(w) for w in data]))
    after = predict_cost(build_trie([StringKey(w) for w in data + [extra]]))
    assert after >= before
