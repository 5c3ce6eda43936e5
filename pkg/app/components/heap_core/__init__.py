from .models import HeapArray, left, parent, right
from .heap import (
    build_heap,
    floyd_sort_phase,
    heapsort_classic,
    heapsort_floyd,
    max_heapify,
    max_heapify_floyd,
    pop_max_floyd,
    sift_down,
    sift_up,
)
from .adversarial import adversarial_red_range, adversarial_red_red, adversarial_size, construct_adversarial_heap

__all__ = [
    "HeapArray",
    "left",
    "parent",
    "right",
    "build_heap",
    "floyd_sort_phase",
    "heapsort_classic",
    "heapsort_floyd",
    "max_heapify",
    "max_heapify_floyd",
    "pop_max_floyd",
    "sift_down",
    "sift_up",
    "adversarial_red_range",
    "adversarial_red_red",
    "adversarial_size",
    "construct_adversarial_heap",
]
