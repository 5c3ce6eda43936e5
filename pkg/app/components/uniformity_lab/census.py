"""
Exhaustive censuses over all input permutations.

Structures are keyed by a canonical string: the live rank array for binary
heaps and `canonical_forest` for binomial queues.
"""

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from multiprocessing import Pool
from typing import Any, Dict, List, Optional

from app.components.base.exceptions import CensusCapExceededError
from app.components.binomial_queue.canonical import canonical_forest
from app.components.binomial_queue.models import RootList
from app.components.binomial_queue.queue import build_queue, pop_max
from app.components.heap_core.heap import build_heap
from app.components.heap_core.models import HeapArray
from app.components.probe.comparator import ComparisonProbe
from app.components.probe.models import keys_from_ranks


@dataclass
class DistributionCensus:
    label: str
    n: int
    counts: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def distinct(self) -> int:
        return len(self.counts)

    @property
    def is_uniform(self) -> bool:
        return len(set(self.counts.values())) <= 1

    @property
    def ratio(self) -> Fraction:
        """Max over min frequency; 1 when uniform."""
        if not self.counts:
            return Fraction(1)
        return Fraction(max(self.counts.values()), min(self.counts.values()))

    def absorb(self, other: Counter) -> "DistributionCensus":
        self.counts.update(other)
        return self

    def rows(self) -> List[Dict[str, Any]]:
        return [
            {"census": self.label, "n": self.n, "structure": structure, "count": count}
            for structure, count in sorted(self.counts.items())
        ]

    def summary(self) -> Dict[str, Any]:
        return {
            "census": self.label,
            "n": self.n,
            "total": self.total,
            "distinct": self.distinct,
            "uniform": self.is_uniform,
            "ratio": str(self.ratio),
        }


def _check_cap(n: int, cap: int, label: str) -> None:
    if n < 0 or n > cap:
        raise CensusCapExceededError(
            f"{label} census is limited to 0 <= n <= {cap}",
            component="uniformity_lab",
            details={"n": n, "cap": cap},
        )


def heap_signature(ranks) -> str:
    heap = HeapArray.from_keys(keys_from_ranks(ranks))
    build_heap(heap, ComparisonProbe.uncolored())
    return ",".join(str(rank) for rank in heap.ranks())


def _buildheap_block(args) -> Counter:
    n, first = args
    rest = [v for v in range(n) if v != first]
    return Counter(heap_signature((first,) + tail) for tail in permutations(rest))


def census_buildheap(n: int, cap: int = 9, jobs: int = 1) -> DistributionCensus:
    """BuildHeap applied to every permutation of ranks 0..n-1."""
    _check_cap(n, cap, "BuildHeap")
    census = DistributionCensus("buildheap", n)
    if n == 0:
        census.counts[""] = 1
        return census
    blocks = [(n, first) for first in range(n)]
    if jobs > 1:
        with Pool(jobs) as pool:
            for counts in pool.map(_buildheap_block, blocks):
                census.absorb(counts)
    else:
        for block in blocks:
            census.absorb(_buildheap_block(block))
    return census


def _binomial_queues(n: int) -> Dict[str, RootList]:
    """Every insertion order of 0..n-1; one representative queue per configuration."""
    representatives: Dict[str, RootList] = {}
    for ranks in permutations(range(n)):
        q = build_queue(keys_from_ranks(ranks), ComparisonProbe.uncolored())
        representatives.setdefault(canonical_forest(q), q)
    return representatives


def census_binomial_build(n: int, cap: int = 6) -> DistributionCensus:
    _check_cap(n, cap, "Binomial build")
    census = DistributionCensus("binomial-build", n)
    for ranks in permutations(range(n)):
        q = build_queue(keys_from_ranks(ranks), ComparisonProbe.uncolored())
        census.counts[canonical_forest(q)] += 1
    return census


@dataclass
class PopCensus:
    """Result of popping the maximum from every n-configuration once."""

    census: DistributionCensus
    expected: int  # number of (n-1)-configurations
    missing: int

    @property
    def preserves_uniformity(self) -> bool:
        return self.missing == 0 and self.census.is_uniform


def census_binomial_popmax(n: int, cap: int = 6) -> PopCensus:
    """pop_max on each distinct n-configuration, weighted uniformly."""
    _check_cap(n, cap, "Binomial pop")
    census = DistributionCensus("binomial-popmax", n - 1)
    if n == 0:
        return PopCensus(census, expected=0, missing=0)
    for q in _binomial_queues(n).values():
        _, rest = pop_max(q, ComparisonProbe.uncolored())
        census.counts[canonical_forest(rest)] += 1
    targets = set(_binomial_queues(n - 1))
    return PopCensus(census, expected=len(targets), missing=len(targets - set(census.counts)))


def expected_heap_multiplicity(n: int, heap_count: int) -> int:
    """n! / H_n; must be an integer for the census to be uniform."""
    quotient, remainder = divmod(math.factorial(n), heap_count)
    return quotient if remainder == 0 else -1


def first_difference(census: DistributionCensus, multiplicity: int) -> Optional[str]:
    for structure, count in sorted(census.counts.items()):
        if count != multiplicity:
            return structure
    return None
