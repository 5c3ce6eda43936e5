"""Counts of binary heaps and binomial queues on distinct keys."""

import math
from functools import lru_cache
from typing import Literal

from app.components.base.exceptions import DomainError

from .tables import RecurrenceTable, binom

BinomialConvention = Literal["ordered-join", "distinct-structure"]


def left_subtree_size(m: int) -> int:
    """Size of the root's left subtree in the complete binary tree on m nodes."""
    if m <= 1:
        return 0
    height = m.bit_length() - 1
    bottom = m - ((1 << height) - 1)
    half = 1 << (height - 1)
    return (half - 1) + min(bottom, half)


@lru_cache(maxsize=None)
def _heap_count(m: int) -> int:
    if m <= 1:
        return 1
    k = left_subtree_size(m)
    return binom(m - 1, k) * _heap_count(k) * _heap_count(m - 1 - k)


def heap_count(m: int) -> int:
    """Number of valid max-heaps on m distinct keys."""
    if m < 0:
        raise DomainError("Heap size must be non-negative", component="combinatorics", details={"m": m})
    return _heap_count(m)


def heap_count_table(m_max: int) -> RecurrenceTable:
    return RecurrenceTable("heap_count", {m: heap_count(m) for m in range(m_max + 1)})


@lru_cache(maxsize=None)
def _ordered_join(n: int) -> int:
    if n <= 2:
        return 1
    top = 1 << (n.bit_length() - 1)
    if top == n:
        half = n // 2
        return binom(n, half) * _ordered_join(half) ** 2
    return binom(n, top) * _ordered_join(top) * _ordered_join(n - top)


@lru_cache(maxsize=None)
def _tree_subtree_product(order: int) -> int:
    """Product of subtree sizes over a binomial tree of size 2^order."""
    product = 1 << order
    for child in range(order):
        product *= _tree_subtree_product(child)
    return product


def _distinct_structure(n: int) -> int:
    product = 1
    for bit in range(n.bit_length()):
        if n >> bit & 1:
            product *= _tree_subtree_product(bit)
    return math.factorial(n) // product


def binomial_queue_count(n: int, convention: BinomialConvention = "distinct-structure") -> int:
    """Number of binomial queues on n distinct keys.

    "ordered-join" evaluates B_n = C(n, 2^k) B_{2^k} B_{n-2^k} with 2^k the
    largest power of two in n, B_{2^m} = C(2^m, 2^(m-1)) B_{2^(m-1)}^2 and
    B_0 = B_1 = B_2 = 1. "distinct-structure" counts heap-ordered forests by the
    hook-length product n! / prod(subtree sizes).
    """
    if n < 0:
        raise DomainError("Queue size must be non-negative", component="combinatorics", details={"n": n})
    if convention == "ordered-join":
        return _ordered_join(n)
    if convention == "distinct-structure":
        return _distinct_structure(n)
    raise DomainError(f"Unknown counting convention {convention!r}", component="combinatorics")


def binomial_count_table(n_max: int, convention: BinomialConvention) -> RecurrenceTable:
    name = "binomial_ordered" if convention == "ordered-join" else "binomial_distinct"
    return RecurrenceTable(name, {n: binomial_queue_count(n, convention) for n in range(n_max + 1)})
