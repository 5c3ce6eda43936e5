"""
Binary heap procedures with every key comparison routed through a probe.

Classic `max_heapify` uses the guarded form: `largest` starts at i and each
child is compared only when it exists. Floyd's pop sifts a hole to the bottom
(one comparison per level with two children), drops the last element into it
and sifts that element up.
"""

from typing import List, Optional

from app.components.base.exceptions import EmptyHeapError, InvalidIndexError
from app.components.probe.comparator import ComparisonProbe
from app.components.probe.models import Key, Phase

from .models import HeapArray, left, parent, right


def _check_index(heap: HeapArray, i: int) -> None:
    if not 1 <= i <= heap.heap_size:
        raise InvalidIndexError(
            f"Index {i} outside 1..{heap.heap_size}",
            component="heap_core",
            details={"index": i, "heap_size": heap.heap_size},
        )


def max_heapify(heap: HeapArray, i: int, probe: ComparisonProbe) -> None:
    """Restore heap order below i, assuming both subtrees are heaps."""
    _check_index(heap, i)
    slots = heap.slots
    size = heap.heap_size
    while True:
        largest = i
        l, r = left(i), right(i)
        if l <= size and probe.greater(slots[l], slots[largest]):
            largest = l
        if r <= size and probe.greater(slots[r], slots[largest]):
            largest = r
        if largest == i:
            return
        heap.swap(i, largest)
        i = largest


def build_heap(heap: HeapArray, probe: ComparisonProbe) -> None:
    """Heapify every index from heap_size down to 1."""
    with probe.phase_scope(Phase.BUILD):
        for i in range(heap.heap_size, 0, -1):
            max_heapify(heap, i, probe)


def sift_down(heap: HeapArray, i: int, probe: ComparisonProbe) -> int:
    """Move the hole at i to the bottom, promoting the larger child each level.

    Returns the final hole index; that slot is left empty.
    """
    _check_index(heap, i)
    slots = heap.slots
    size = heap.heap_size
    hole = i
    while True:
        l = left(hole)
        if l > size:
            break
        child = l
        if l + 1 <= size and probe.greater(slots[l + 1], slots[l]):
            child = l + 1
        slots[hole] = slots[child]
        hole = child
    slots[hole] = None
    return hole


def sift_up(heap: HeapArray, i: int, probe: ComparisonProbe) -> None:
    _check_index(heap, i)
    slots = heap.slots
    while i != 1:
        p = parent(i)
        if not probe.less(slots[p], slots[i]):
            return
        heap.swap(p, i)
        i = p


def max_heapify_floyd(heap: HeapArray, i: int, probe: ComparisonProbe) -> None:
    """Fill the logically removed position i from the last heap slot.

    Consumes the last slot: heap_size shrinks by one.
    """
    if heap.heap_size == 0:
        raise EmptyHeapError("Cannot pop from an empty heap", component="heap_core")
    _check_index(heap, i)
    last = heap.heap_size
    fill = heap.slots[last]
    heap.slots[last] = None
    heap.heap_size -= 1
    if i == last:
        return
    hole = sift_down(heap, i, probe)
    heap.slots[hole] = fill
    sift_up(heap, hole, probe)


def pop_max_floyd(heap: HeapArray, probe: ComparisonProbe) -> Key:
    if heap.heap_size == 0:
        raise EmptyHeapError("Cannot pop from an empty heap", component="heap_core")
    top = heap.slots[1]
    probe.mark_segment(top)
    max_heapify_floyd(heap, 1, probe)
    return top


def floyd_sort_phase(heap: HeapArray, probe: ComparisonProbe, pops: Optional[int] = None) -> List[Key]:
    """Pop `pops` keys (default: all) with Floyd's procedure, largest first."""
    count = heap.heap_size if pops is None else pops
    popped: List[Key] = []
    with probe.phase_scope(Phase.SORT):
        for _ in range(count):
            popped.append(pop_max_floyd(heap, probe))
    probe.clear_segment()
    return popped


def heapsort_classic(keys: List[Key], probe: ComparisonProbe) -> List[Key]:
    heap = HeapArray.from_keys(keys)
    build_heap(heap, probe)
    with probe.phase_scope(Phase.SORT):
        for i in range(heap.heap_size, 1, -1):
            probe.mark_segment(heap.slots[1])
            heap.swap(1, i)
            heap.heap_size -= 1
            max_heapify(heap, 1, probe)
    probe.clear_segment()
    return heap.slots[1:]


def heapsort_floyd(keys: List[Key], probe: ComparisonProbe) -> List[Key]:
    heap = HeapArray.from_keys(keys)
    build_heap(heap, probe)
    popped = floyd_sort_phase(heap, probe)
    popped.reverse()
    return popped
