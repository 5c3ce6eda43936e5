"""Split distributions for red keys between subheaps."""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from app.components.base.exceptions import DomainError

from .tables import RecurrenceTable, binom


def split_probability_P(m: int, r: int, r_prime: int) -> Fraction:
    """Probability that r_prime of r red keys land in one m-subset of a (2m+1)-heap.

    C(2m+1-r, m-r') C(r, r') / C(2m+1, m); zero when any argument is out of range.
    """
    if m < 0 or r < 0 or r > 2 * m + 1 or r_prime < 0 or r_prime > r:
        return Fraction(0)
    return Fraction(binom(2 * m + 1 - r, m - r_prime) * binom(r, r_prime), binom(2 * m + 1, m))


def split_probability_T(r: int, r_prime: int) -> Fraction:
    """Fair-coin split C(r, r') / 2^r."""
    if r < 0 or r_prime < 0 or r_prime > r:
        return Fraction(0)
    return Fraction(binom(r, r_prime), 1 << r)


@dataclass(frozen=True)
class CrossingReport:
    m: int
    r: int
    window: Optional[Tuple[int, int]]
    contiguous: bool
    contains_mode: bool
    delta: float

    @property
    def holds(self) -> bool:
        return self.window is not None and self.contiguous and self.contains_mode


def crossing_window(m: int, r: int) -> CrossingReport:
    """Where P dominates T, and whether that set is one interval around the middle.

    P/T is proportional to C(2m+1-r, m-r'), so the window should be the
    interval around the mode of that coefficient.
    """
    if r > 2 * m + 1:
        raise DomainError("r exceeds heap size", component="combinatorics", details={"m": m, "r": r})
    dominant = [rp for rp in range(r + 1) if split_probability_P(m, r, rp) >= split_probability_T(r, rp)]
    if not dominant:
        return CrossingReport(m, r, None, False, False, 0.0)
    lo, hi = dominant[0], dominant[-1]
    contiguous = dominant == list(range(lo, hi + 1))
    weights = [binom(2 * m + 1 - r, m - rp) for rp in range(r + 1)]
    peak = max(weights)
    modes = [rp for rp, w in enumerate(weights) if w == peak]
    contains_mode = all(lo <= rp <= hi for rp in modes)
    delta = max(r / 2 - lo, hi - r / 2)
    return CrossingReport(m, r, (lo, hi), contiguous, contains_mode, delta)


def alt_model_split(N: int, k: int) -> Fraction:
    """Left-subheap size law of the coin-flip insertion model: C(N-1, k) / 2^(N-1)."""
    if N < 1 or not 0 <= k <= N - 1:
        raise DomainError(
            f"Split index {k} outside 0..{N - 1}",
            component="combinatorics",
            details={"N": N, "k": k},
        )
    return Fraction(binom(N - 1, k), 1 << (N - 1))


def preservation_identity_holds(N: int) -> bool:
    """p^N_k == (k+1)/N p^(N+1)_(k+1) + (N-k)/N p^(N+1)_k for every k."""
    for k in range(N):
        lhs = alt_model_split(N, k)
        rhs = Fraction(k + 1, N) * alt_model_split(N + 1, k + 1) + Fraction(N - k, N) * alt_model_split(N + 1, k)
        if lhs != rhs:
            return False
    return True


def split_P_table(m_max: int, r_cap: int = 20) -> RecurrenceTable:
    values = {}
    for m in range(m_max + 1):
        for r in range(min(2 * m + 1, r_cap) + 1):
            for rp in range(r + 1):
                values[(m, r, rp)] = split_probability_P(m, r, rp)
    return RecurrenceTable("split_P", values)


def split_T_table(r_max: int) -> RecurrenceTable:
    return RecurrenceTable(
        "split_T",
        {(r, rp): split_probability_T(r, rp) for r in range(r_max + 1) for rp in range(r + 1)},
    )


def alt_split_table(N_max: int) -> RecurrenceTable:
    return RecurrenceTable(
        "alt_split",
        {(N, k): alt_model_split(N, k) for N in range(1, N_max + 1) for k in range(N)},
    )


def normalization_failures(m_max: int, r_cap: int = 20) -> List[Tuple[str, int, int]]:
    """Grid points where P or T fail to sum to exactly one (empty when all hold)."""
    failures = []
    for m in range(m_max + 1):
        for r in range(min(2 * m + 1, r_cap) + 1):
            if sum(split_probability_P(m, r, rp) for rp in range(r + 1)) != 1:
                failures.append(("P", m, r))
    for r in range(r_cap + 1):
        if sum(split_probability_T(r, rp) for rp in range(r + 1)) != 1:
            failures.append(("T", 0, r))
    return failures
