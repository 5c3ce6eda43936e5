import numpy as np
import pytest
from hypothesis import given, strategies as st

from app.components.heap_core.heap import build_heap
from app.components.heap_core.models import HeapArray
from app.components.probe.comparator import ComparisonProbe
from app.components.probe.models import ColorClass, Phase, RedRange, keys_from_ranks
from app.components.probe.rng import shuffle, trial_seed
from app.components.run_partition.models import Run
from app.components.run_partition.modified import heapsort_modified, merge_runs, pad_with_dummies


@pytest.mark.parametrize("size, padded", [(3, 7), (7, 15), (15, 31), (31, 63)])
def test_padding_adds_one_bottom_level(size, padded):
    heap = HeapArray.from_keys(shuffle(keys_from_ranks(range(size)), size))
    build_heap(heap, ComparisonProbe.uncolored())
    out = pad_with_dummies(heap.live())
    assert out.heap_size == padded
    assert sum(key.is_dummy for key in out.live()) == size + 1
    assert out.is_heap()


def test_merge_two_runs(uncolored):
    runs = [Run(keys_from_ranks([1, 3]), 3), Run(keys_from_ranks([2]), 1)]
    assert [k.rank for k in merge_runs(runs, uncolored)] == [1, 2, 3]
    assert uncolored.sheet.phase_total(Phase.MERGE) <= 2


def test_single_run_merges_for_free(uncolored):
    assert [k.rank for k in merge_runs([Run(keys_from_ranks([0, 1, 2]), 3)], uncolored)] == [0, 1, 2]
    assert uncolored.sheet.total == 0
    assert merge_runs([], uncolored) == []


@given(st.lists(st.lists(st.integers(), max_size=12), min_size=1, max_size=5))
def test_merge_matches_sorted_concatenation(groups):
    flat = [v for group in groups for v in group]
    order = sorted(range(len(flat)), key=lambda i: (flat[i], i))
    rank_of = {index: rank for rank, index in enumerate(order)}
    runs, start = [], 0
    for group in groups:
        block = sorted(rank_of[start + i] for i in range(len(group)))
        runs.append(Run(keys_from_ranks(block), len(group)))
        start += len(group)
    runs.sort(key=lambda run: run.block_size, reverse=True)
    probe = ComparisonProbe.uncolored()
    merged = merge_runs(runs, probe)
    assert [k.rank for k in merged] == list(range(len(flat)))
    assert probe.sheet.total <= max(0, len(flat) - 1) * max(1, len(runs) - 1)


def test_sorts_ten(shuffled, uncolored):
    assert [k.rank for k in heapsort_modified(shuffled(10), uncolored)] == list(range(10))


@given(st.integers(min_value=0, max_value=200), st.integers(min_value=0, max_value=2**32))
def test_sorts_any_shuffle(n, seed):
    out = heapsort_modified(shuffle(keys_from_ranks(range(n)), seed), ComparisonProbe.uncolored())
    assert [k.rank for k in out] == list(range(n))


def test_phase_labels_cover_every_comparison(top_probe, shuffled):
    probe = top_probe(100, 25)
    heapsort_modified(shuffled(100), probe)
    sheet = probe.sheet
    assert sum(sheet.phase_total(p) for p in (Phase.BUILD, Phase.SORT, Phase.MERGE)) == sheet.total
    assert sheet.phase_total(Phase.MERGE) > 0


def test_merge_red_red_within_two_r():
    n, r = 100, 25
    counts = []
    for t in range(200):
        probe = ComparisonProbe(RedRange.top(n, r))
        heapsort_modified(shuffle(keys_from_ranks(range(n)), trial_seed(5, t)), probe)
        counts.append(probe.sheet.get(Phase.MERGE, ColorClass.RED_RED))
    assert np.mean(counts) <= 2 * r


def test_dummy_comparisons_stay_linear():
    for n in (63, 255, 1023):
        dummies = []
        for t in range(5):
            probe = ComparisonProbe.uncolored()
            heapsort_modified(shuffle(keys_from_ranks(range(n)), trial_seed(9, t)), probe)
            dummies.append(probe.sheet.color_total(ColorClass.DUMMY))
        assert np.mean(dummies) <= 6 * n
