"""Simulation of the coin-flip heap model: split law and pop costs."""

import math
from dataclasses import dataclass
from typing import Any, Dict, List

import numpy as np

from app.components.combinatorics.recurrences import c_recurrence
from app.components.probe.comparator import ComparisonProbe
from app.components.probe.models import Phase, RedRange, keys_from_ranks
from app.components.probe.rng import SplitMix64, shuffle, trial_seed

from .pointer_heap import PointerHeap, insert_alternate, pop_max

# Coin stream seeds are offset from the shuffle seeds.
COIN_STREAM = 0x5DEECE66D


def build_alternate(N: int, seed: int, probe: ComparisonProbe) -> PointerHeap:
    heap = PointerHeap()
    coins = SplitMix64(seed ^ COIN_STREAM)
    with probe.phase_scope(Phase.BUILD):
        for key in shuffle(keys_from_ranks(range(N)), seed):
            insert_alternate(heap, key, coins, probe)
    return heap


def sample_left_sizes(N: int, trials: int, seed: int) -> List[int]:
    """Root left-subtree size after N coin-flip insertions, one per trial."""
    return [
        build_alternate(N, trial_seed(seed, t), ComparisonProbe.uncolored()).left_size()
        for t in range(trials)
    ]


@dataclass
class MaturePhaseReport:
    N: int
    trials: int
    seed: int
    first_pop_mean: float
    first_pop_expected: float
    total_mean: float
    total_expected: float
    total_max: int
    bound: float

    @property
    def per_pop_mean(self) -> float:
        return self.total_mean / self.N if self.N else 0.0

    @property
    def additive_constant(self) -> float:
        """Mean per-pop cost minus log2 r."""
        return self.per_pop_mean - (math.log2(self.N) if self.N else 0.0)

    @property
    def first_pop_relative_error(self) -> float:
        if self.first_pop_expected == 0:
            return abs(self.first_pop_mean)
        return abs(self.first_pop_mean - self.first_pop_expected) / self.first_pop_expected

    @property
    def within_bound(self) -> bool:
        return self.total_max <= self.bound

    def to_dict(self) -> Dict[str, Any]:
        return {
            "N": self.N,
            "trials": self.trials,
            "seed": self.seed,
            "first_pop_mean": self.first_pop_mean,
            "first_pop_expected": self.first_pop_expected,
            "total_mean": self.total_mean,
            "total_expected": self.total_expected,
            "total_max": self.total_max,
            "bound": self.bound,
            "per_pop_mean": self.per_pop_mean,
            "additive_constant": self.additive_constant,
        }


def mature_phase_census(N: int, trials: int, seed: int) -> MaturePhaseReport:
    """Pop every key of coin-flip heaps whose keys are all red (r = N)."""
    red = RedRange.top(N, N)
    first_costs = np.zeros(trials)
    totals = np.zeros(trials, dtype=np.int64)
    for t in range(trials):
        probe = ComparisonProbe(red)
        heap = build_alternate(N, trial_seed(seed, t), probe)
        with probe.phase_scope(Phase.SORT):
            for pop in range(N):
                before = probe.sheet.phase_total(Phase.SORT)
                pop_max(heap, probe)
                if pop == 0:
                    first_costs[t] = probe.sheet.phase_total(Phase.SORT) - before
        probe.clear_segment()
        totals[t] = probe.sheet.phase_total(Phase.SORT)
    r = N
    return MaturePhaseReport(
        N=N,
        trials=trials,
        seed=seed,
        first_pop_mean=float(first_costs.mean()) if trials else 0.0,
        first_pop_expected=float(c_recurrence(N, "exact")),
        total_mean=float(totals.mean()) if trials else 0.0,
        total_expected=float(sum(c_recurrence(k, "exact") for k in range(N + 1))),
        total_max=int(totals.max()) if trials else 0,
        bound=r * math.log2(r) + 4 * r if r else 0.0,
    )
