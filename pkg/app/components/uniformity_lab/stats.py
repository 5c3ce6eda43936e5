"""Chi-square goodness of fit against exact cell probabilities."""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np
from scipy.stats import chisquare

from app.components.combinatorics.splits import alt_model_split


@dataclass(frozen=True)
class ChiSquareResult:
    statistic: float
    p_value: float
    dof: int
    alpha: float
    cells: int

    @property
    def passed(self) -> bool:
        return self.p_value >= self.alpha


def pool_cells(observed: Sequence[int], expected: Sequence[float], min_expected: float = 50.0) -> Tuple[List[int], List[float]]:
    """Merge adjacent cells, outside in, until every expected count reaches `min_expected`."""
    obs, exp = list(observed), list(expected)
    while len(exp) > 2 and exp[0] < min_expected:
        first_obs, first_exp = obs.pop(0), exp.pop(0)
        obs[0] += first_obs
        exp[0] += first_exp
    while len(exp) > 2 and exp[-1] < min_expected:
        last_obs, last_exp = obs.pop(), exp.pop()
        obs[-1] += last_obs
        exp[-1] += last_exp
    return obs, exp


def chi_square_test(
    observed: Sequence[int],
    probabilities: Sequence[Fraction],
    alpha: float,
    min_expected: float = 50.0,
) -> ChiSquareResult:
    total = sum(observed)
    expected = [float(p) * total for p in probabilities]
    obs, exp = pool_cells(observed, expected, min_expected)
    statistic, p_value = chisquare(np.asarray(obs, dtype=float), np.asarray(exp, dtype=float))
    return ChiSquareResult(float(statistic), float(p_value), len(obs) - 1, alpha, len(obs))


def split_law_test(left_sizes: Sequence[int], N: int, alpha: float) -> ChiSquareResult:
    """Observed left-subtree sizes of N-node heaps against C(N-1, k) / 2^(N-1)."""
    observed = np.bincount(np.asarray(left_sizes, dtype=int), minlength=N)[:N]
    probabilities = [alt_model_split(N, k) for k in range(N)]
    return chi_square_test(observed.tolist(), probabilities, alpha)
