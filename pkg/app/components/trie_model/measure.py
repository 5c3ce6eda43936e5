from dataclasses import dataclass
from typing import Sequence

import numpy as np

from app.components.probe.models import StringKey
from app.components.probe.rng import trial_seed
from app.components.probe.strings import instrumented_quicksort


@dataclass(frozen=True)
class SymbolCostSample:
    trials: int
    mean: float
    std: float

    @property
    def stderr(self) -> float:
        return self.std / np.sqrt(self.trials) if self.trials else 0.0


def measure_symbol_cost(keys: Sequence[StringKey], trials: int, seed: int) -> SymbolCostSample:
    """Symbol comparisons of the reference Quicksort over `trials` seeded shuffles."""
    costs = np.fromiter(
        (instrumented_quicksort(keys, trial_seed(seed, t)).symbol_cost for t in range(trials)),
        dtype=float,
        count=trials,
    )
    if trials == 0:
        return SymbolCostSample(0, 0.0, 0.0)
    return SymbolCostSample(trials, float(costs.mean()), float(costs.std()))
