"""
Symbol-level string comparison and the reference Quicksort.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, List, Sequence, Tuple

from .comparator import Ordering
from .models import StringKey
from .rng import shuffle

SymbolComparator = Callable[[Any, Any], Tuple[Ordering, int]]


def string_compare(a: StringKey, b: StringKey) -> Tuple[Ordering, int]:
    """Lexicographic comparison charged per symbol inspected.

    Cost is LCP + 1 when both strings have a symbol at position LCP, and LCP
    when one string ends there (end of string needs no symbol comparison).
    """
    x, y = a.data, b.data
    limit = min(len(x), len(y))
    lcp = 0
    while lcp < limit and x[lcp] == y[lcp]:
        lcp += 1
    if lcp < limit:
        return (-1 if x[lcp] < y[lcp] else 1), lcp + 1
    return (len(x) > len(y)) - (len(x) < len(y)), lcp


def unit_compare(a: Any, b: Any) -> Tuple[Ordering, int]:
    """Atomic key comparison with unit cost."""
    return (a > b) - (a < b), 1


@dataclass
class QuicksortResult:
    keys: List[Any] = field(default_factory=list)
    symbol_cost: int = 0
    comparisons: int = 0


def instrumented_quicksort(
    keys: Sequence[Any],
    seed: int,
    compare: SymbolComparator = string_compare,
) -> QuicksortResult:
    """First-pivot Quicksort over a seeded shuffle of `keys`.

    Each partition compares its pivot against every other element once.
    """
    result = QuicksortResult()
    output: List[Any] = []
    # LIFO of ("sort", segment) / ("emit", pivot); pops in in-order sequence
    stack: List[Tuple[str, Any]] = [("sort", shuffle(keys, seed))]
    while stack:
        tag, payload = stack.pop()
        if tag == "emit":
            output.append(payload)
            continue
        segment = payload
        if len(segment) <= 1:
            output.extend(segment)
            continue
        pivot = segment[0]
        smaller: List[Any] = []
        larger: List[Any] = []
        for item in segment[1:]:
            ordering, cost = compare(item, pivot)
            result.comparisons += 1
            result.symbol_cost += cost
            (smaller if ordering < 0 else larger).append(item)
        stack.append(("sort", larger))
        stack.append(("emit", pivot))
        stack.append(("sort", smaller))
    result.keys = output
    return result
