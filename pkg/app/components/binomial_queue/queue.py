"""
Binomial queue procedures, probe-instrumented.

Root-list merging works like binary addition. `_add` carries the Add contract:
a node meets a same-size carry and the two are joined, otherwise both settle
into the output. A carry left over after both lists end is appended.
"""

from typing import Callable, List, Optional, Sequence, Tuple

from app.components.base.exceptions import EmptyQueueError, StructuralError
from app.components.probe.comparator import ComparisonProbe
from app.components.probe.models import Key, Phase, RedRange

from .models import BinomialTree, RootList

QueueObserver = Callable[[RootList], None]


def merge_trees(a: BinomialTree, b: BinomialTree, probe: ComparisonProbe) -> BinomialTree:
    """Join two equal-size trees; the larger root adopts the other as first child."""
    if a.size != b.size:
        raise StructuralError(
            f"Cannot join trees of sizes {a.size} and {b.size}",
            component="binomial_queue",
            details={"left": a.size, "right": b.size},
        )
    winner, loser = (a, b) if probe.greater(a.root_key, b.root_key) else (b, a)
    return BinomialTree(
        root_key=winner.root_key,
        children=(loser,) + winner.children,
        size=winner.size * 2,
    )


def _add(
    out: List[BinomialTree],
    node: BinomialTree,
    carry: Optional[BinomialTree],
    probe: ComparisonProbe,
) -> Optional[BinomialTree]:
    if carry is None:
        out.append(node)
        return None
    if carry.size == node.size:
        return merge_trees(node, carry, probe)
    # carry never exceeds the node it meets
    out.append(carry)
    out.append(node)
    return None


def merge_root_lists(a: RootList, b: RootList, probe: ComparisonProbe) -> RootList:
    out: List[BinomialTree] = []
    carry: Optional[BinomialTree] = None
    i = j = 0
    first, second = a.trees, b.trees
    while i < len(first) and j < len(second):
        t1, t2 = first[i], second[j]
        if t1.size == t2.size:
            if carry is not None:
                out.append(carry)
            carry = merge_trees(t1, t2, probe)
            i += 1
            j += 1
        elif t1.size < t2.size:
            carry = _add(out, t1, carry, probe)
            i += 1
        else:
            carry = _add(out, t2, carry, probe)
            j += 1
    for t in first[i:]:
        carry = _add(out, t, carry, probe)
    for t in second[j:]:
        carry = _add(out, t, carry, probe)
    if carry is not None:
        out.append(carry)
    return RootList(tuple(out))


def insert(q: RootList, key: Key, probe: ComparisonProbe) -> RootList:
    return merge_root_lists(q, RootList((BinomialTree.singleton(key),)), probe)


def find_max(q: RootList, probe: ComparisonProbe) -> Tuple[int, int]:
    """Scan roots from the largest tree down.

    Returns (index into q.trees, number of roots inspected before the maximum).
    """
    if not q.trees:
        raise EmptyQueueError("Cannot find the maximum of an empty queue", component="binomial_queue")
    best = len(q.trees) - 1
    best_position = 0
    with probe.phase_scope(Phase.FIND_MAX):
        for position, index in enumerate(range(len(q.trees) - 2, -1, -1), start=1):
            if probe.greater(q.trees[index].root_key, q.trees[best].root_key):
                best = index
                best_position = position
    return best, best_position


def pop_max(q: RootList, probe: ComparisonProbe) -> Tuple[Key, RootList]:
    """Remove the maximum and merge its children back, smallest first."""
    index, _ = find_max(q, probe)
    tree = q.trees[index]
    probe.mark_segment(tree.root_key)
    children = RootList(tuple(reversed(tree.children)))
    with probe.phase_scope(Phase.POP_MERGE):
        rest = merge_root_lists(q.without(index), children, probe)
    probe.clear_segment()
    return tree.root_key, rest


def build_queue(keys: Sequence[Key], probe: ComparisonProbe) -> RootList:
    q = RootList()
    with probe.phase_scope(Phase.BUILD):
        for key in keys:
            q = insert(q, key, probe)
    return q


def binomial_heapsort(
    keys: Sequence[Key],
    probe: ComparisonProbe,
    observer: Optional[QueueObserver] = None,
) -> List[Key]:
    """n inserts then n pops; `observer` sees the queue after the build and after every pop."""
    q = build_queue(keys, probe)
    if observer is not None:
        observer(q)
    popped: List[Key] = []
    while q.trees:
        key, q = pop_max(q, probe)
        popped.append(key)
        if observer is not None:
            observer(q)
    popped.reverse()
    return popped


def red_roots(q: RootList, red: RedRange) -> int:
    return sum(1 for tree in q.trees if red.is_red(tree.root_key))
