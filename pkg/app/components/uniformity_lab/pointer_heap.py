"""
Linked heap for the coin-flip insertion model.

Subtree sizes are free to drift, so the shape is stored explicitly rather
than implied by array positions.
"""

from dataclasses import dataclass
from typing import List, Optional

from app.components.base.exceptions import EmptyHeapError
from app.components.heap_core.models import HeapArray, left, right
from app.components.probe.comparator import ComparisonProbe
from app.components.probe.models import Key
from app.components.probe.rng import SplitMix64


@dataclass
class PointerNode:
    key: Key
    left: Optional["PointerNode"] = None
    right: Optional["PointerNode"] = None
    size: int = 1


class PointerHeap:
    def __init__(self, root: Optional[PointerNode] = None):
        self.root = root

    def __len__(self) -> int:
        return self.root.size if self.root else 0

    @classmethod
    def from_array(cls, heap: HeapArray) -> "PointerHeap":
        """Same shape and keys as the live part of an array heap."""

        def build(i: int) -> Optional[PointerNode]:
            if i > heap.heap_size:
                return None
            l, r = build(left(i)), build(right(i))
            size = 1 + (l.size if l else 0) + (r.size if r else 0)
            return PointerNode(heap.slots[i], l, r, size)

        return cls(build(1))

    def left_size(self) -> int:
        return self.root.left.size if self.root and self.root.left else 0

    def keys(self) -> List[Key]:
        out: List[Key] = []
        stack = [self.root] if self.root else []
        while stack:
            node = stack.pop()
            out.append(node.key)
            stack.extend(child for child in (node.left, node.right) if child)
        return out

    def is_heap(self) -> bool:
        """Heap order and size bookkeeping (uncounted)."""
        stack = [self.root] if self.root else []
        while stack:
            node = stack.pop()
            size = 1
            for child in (node.left, node.right):
                if child is None:
                    continue
                if child.key.rank > node.key.rank:
                    return False
                size += child.size
                stack.append(child)
            if size != node.size:
                return False
        return True


def insert_alternate(heap: PointerHeap, x: Key, rng: SplitMix64, probe: ComparisonProbe) -> PointerHeap:
    """Insert x: the larger of x and each visited root stays, the smaller goes to a random side."""
    if heap.root is None:
        heap.root = PointerNode(x)
        return heap
    node = heap.root
    carry = x
    while True:
        node.size += 1
        if probe.greater(carry, node.key):
            node.key, carry = carry, node.key
        if rng.coin():
            if node.right is None:
                node.right = PointerNode(carry)
                return heap
            node = node.right
        else:
            if node.left is None:
                node.left = PointerNode(carry)
                return heap
            node = node.left


def pop_max(heap: PointerHeap, probe: ComparisonProbe) -> Key:
    """Remove the root by promoting the larger child level by level down to a leaf.

    One comparison per level where both children exist.
    """
    if heap.root is None:
        raise EmptyHeapError("Cannot pop from an empty heap", component="uniformity_lab")
    top = heap.root.key
    probe.mark_segment(top)
    parent: Optional[PointerNode] = None
    node = heap.root
    while True:
        node.size -= 1
        l, r = node.left, node.right
        if l is None and r is None:
            break
        if l is None:
            child = r
        elif r is None:
            child = l
        else:
            child = l if probe.greater(l.key, r.key) else r
        node.key = child.key
        parent, node = node, child
    if parent is None:
        heap.root = None
    elif parent.left is node:
        parent.left = None
    else:
        parent.right = None
    return top
