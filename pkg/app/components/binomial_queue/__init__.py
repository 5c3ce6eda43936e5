from .models import BinomialTree, RootList
from .queue import (
    binomial_heapsort,
    build_queue,
    find_max,
    insert,
    merge_root_lists,
    merge_trees,
    pop_max,
    red_roots,
)
from .canonical import canonical_forest, canonical_tree

__all__ = [
    "BinomialTree",
    "RootList",
    "binomial_heapsort",
    "build_queue",
    "find_max",
    "insert",
    "merge_root_lists",
    "merge_trees",
    "pop_max",
    "red_roots",
    "canonical_forest",
    "canonical_tree",
]
