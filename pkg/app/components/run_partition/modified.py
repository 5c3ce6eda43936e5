"""
Modified Heapsort: split into almost-binary blocks, heapsort each block on a
dummy-padded heap with Floyd's pops, then merge the runs largest-first.
"""

from typing import List, Sequence

from app.components.heap_core.heap import build_heap, floyd_sort_phase
from app.components.heap_core.models import HeapArray
from app.components.probe.comparator import ComparisonProbe
from app.components.probe.models import Key, Phase

from .expansion import almost_binary_expansion
from .models import Run


def pad_with_dummies(keys: Sequence[Key]) -> HeapArray:
    """Append one full bottom level of dummies below a heapified block of 2^s - 1 keys."""
    size = len(keys)
    level = size + 1  # 2^s slots on the new bottom level
    padded = list(keys) + [Key.dummy(index) for index in range(level)]
    return HeapArray.from_keys(padded)


def merge_two(a: List[Key], b: List[Key], probe: ComparisonProbe) -> List[Key]:
    out: List[Key] = []
    i = j = 0
    while i < len(a) and j < len(b):
        if probe.less(b[j], a[i]):
            out.append(b[j])
            j += 1
        else:
            out.append(a[i])
            i += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return out


def merge_runs(runs: Sequence[Run], probe: ComparisonProbe) -> List[Key]:
    """Left-fold two-way merge, starting from the largest run."""
    if not runs:
        return []
    with probe.phase_scope(Phase.MERGE):
        merged = list(runs[0].keys)
        for run in runs[1:]:
            merged = merge_two(merged, run.keys, probe)
    return merged


def sort_block(block: Sequence[Key], probe: ComparisonProbe) -> Run:
    heap = HeapArray.from_keys(block)
    build_heap(heap, probe)
    padded = pad_with_dummies(heap.live())
    popped = floyd_sort_phase(padded, probe, pops=len(block))
    popped.reverse()
    return Run(keys=popped, block_size=len(block))


def heapsort_modified(keys: Sequence[Key], probe: ComparisonProbe) -> List[Key]:
    """Blocks are contiguous segments of the input, largest first."""
    expansion = almost_binary_expansion(len(keys))
    runs: List[Run] = []
    start = 0
    for size in expansion.block_sizes:
        runs.append(sort_block(keys[start : start + size], probe))
        start += size
    return merge_runs(runs, probe)
