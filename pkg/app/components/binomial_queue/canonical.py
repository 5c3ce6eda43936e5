"""
Canonical text form of a binomial forest.

A node renders as `(rank child child ...)` with children sorted by
(size, root rank); the forest joins its trees, sorted the same way, with
spaces. Two queues have equal canonical forms exactly when they hold the same
heap-ordered forest.
"""

from .models import BinomialTree, RootList


def _sort_key(tree: BinomialTree) -> tuple:
    return (tree.size, tree.root_key.rank)


def canonical_tree(tree: BinomialTree) -> str:
    if not tree.children:
        return f"({tree.root_key.rank})"
    inner = " ".join(canonical_tree(child) for child in sorted(tree.children, key=_sort_key))
    return f"({tree.root_key.rank} {inner})"


def canonical_forest(q: RootList) -> str:
    return " ".join(canonical_tree(tree) for tree in sorted(q.trees, key=_sort_key))
