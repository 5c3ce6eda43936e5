"""Numeric bound checks and closed-form expectations."""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Union

import numpy as np

from app.components.base.exceptions import DomainError, InvalidDistributionError

from .counts import binomial_queue_count
from .recurrences import g_closed_form, h_residual_range
from .tables import RecurrenceTable, binom

Number = Union[int, float, Fraction]


@dataclass
class CheckReport:
    """Outcome of a sweep: pass flag, worst point, and check-specific extras."""

    name: str
    passed: bool
    checked: int
    worst_index: Optional[int] = None
    worst_margin: Optional[float] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "worst_index": self.worst_index,
            "worst_margin": self.worst_margin,
            **self.details,
        }


def g_concavity_check(N_max: int, tail: float = 1e-12) -> CheckReport:
    """G(N+2) - 2G(N+1) + G(N) > (1 - 2/e)/(N+1) for 2 <= N <= N_max, closed form."""
    if N_max < 2:
        raise DomainError("Concavity sweep starts at N = 2", component="combinatorics", details={"N_max": N_max})
    G = g_closed_form(N_max + 2, tail)
    Ns = np.arange(2, N_max + 1)
    second = G[Ns + 2] - 2 * G[Ns + 1] + G[Ns]
    bound = (1 - 2 / math.e) / (Ns + 1)
    margin = second - bound
    worst = int(np.argmin(margin))
    return CheckReport(
        name="g_concavity",
        passed=bool(np.all(margin > 0)),
        checked=len(Ns),
        worst_index=int(Ns[worst]),
        worst_margin=float(margin[worst]),
        details={"min_second_difference": float(second.min()), "tail": tail},
    )


def g_ratio_check(N_lo: int = 1 << 10, N_hi: int = 1 << 16, band: tuple = (0.8, 1.2)) -> CheckReport:
    """G(N) / (N log2 N) inside `band` over [N_lo, N_hi]."""
    G = g_closed_form(N_hi)
    Ns = np.arange(max(N_lo, 2), N_hi + 1)
    ratio = G[Ns] / (Ns * np.log2(Ns))
    lo, hi = band
    distance = np.minimum(ratio - lo, hi - ratio)
    worst = int(np.argmin(distance))
    return CheckReport(
        name="g_ratio",
        passed=bool(np.all(distance >= 0)),
        checked=len(Ns),
        worst_index=int(Ns[worst]),
        worst_margin=float(distance[worst]),
        details={"ratio_min": float(ratio.min()), "ratio_max": float(ratio.max())},
    )


def h_residual_check(k_max: int, tail: float = 1e-12, band: tuple = (-1.0, 2.0), tolerance: float = 1e-9) -> CheckReport:
    lo, hi = h_residual_range(k_max, tail)
    return CheckReport(
        name="h_residual",
        passed=lo >= band[0] - tolerance and hi <= band[1] + tolerance,
        checked=k_max,
        worst_margin=min(lo - band[0], band[1] - hi),
        details={"residual_min": lo, "residual_max": hi, "tail": tail},
    )


def integral_approximation(r: int) -> float:
    """(r^2 / 2) log2 r - r^2 / (4 ln 2), the continuous stand-in for sum r' log2 r'."""
    return r * r / 2 * math.log2(r) - r * r / (4 * math.log(2))


def appendix_sum_bound_check(r_max: int) -> CheckReport:
    """sum_{0<r'<r} r' log2 r' < (r-1)^2/2 log2 r - (r-1)^2/16 for 16 <= r <= r_max."""
    if r_max < 16:
        raise DomainError("Bound holds from r = 16 on", component="combinatorics", details={"r_max": r_max})
    rp = np.arange(1, r_max, dtype=float)
    partial = np.concatenate(([0.0, 0.0], np.cumsum(rp * np.log2(rp))))  # partial[r] = sum over r' < r
    rs = np.arange(16, r_max + 1)
    sums = partial[rs]
    bound = (rs - 1.0) ** 2 / 2 * np.log2(rs) - (rs - 1.0) ** 2 / 16
    margin = bound - sums
    worst = int(np.argmin(margin))
    approx = integral_approximation(r_max)
    return CheckReport(
        name="appendix_sum_bound",
        passed=bool(np.all(margin > 0)),
        checked=len(rs),
        worst_index=int(rs[worst]),
        worst_margin=float(margin[worst]),
        details={
            "sum_at_r_max": float(sums[-1]),
            "integral_approximation": approx,
            "integral_relative_error": abs(approx - float(sums[-1])) / float(sums[-1]),
        },
    )


def drift_bound(r: float) -> float:
    """Expected drift steps from r with rate 1/2: 2 (ln r + 1)."""
    if r < 1:
        raise DomainError("Drift bound needs r >= 1", component="combinatorics", details={"r": r})
    return 2 * (math.log(r) + 1)


@dataclass(frozen=True)
class ScanLengthReport:
    expected: Number
    upper: Number
    admissible: bool

    @property
    def within_upper(self) -> bool:
        return self.expected <= self.upper

    @property
    def within_two(self) -> Optional[bool]:
        """Only meaningful for admissible (halving) sequences."""
        return self.upper <= 2 if self.admissible else None

    @property
    def passed(self) -> bool:
        return self.within_upper and self.within_two is not False


def scan_length_bound(p: Sequence[Number]) -> ScanLengthReport:
    """Expected scan position of the first hit, sum i p_i prod_{j<i} (1 - p_j), 1-based."""
    if not p or any(pi < 0 for pi in p):
        raise InvalidDistributionError(
            "Probabilities must be non-negative and non-empty",
            component="combinatorics",
            details={"length": len(p)},
        )
    total = sum(p)
    exact = all(isinstance(pi, (int, Fraction)) for pi in p)
    if (exact and total != 1) or (not exact and not math.isclose(total, 1.0, abs_tol=1e-9)):
        raise InvalidDistributionError(
            "Probabilities must sum to one",
            component="combinatorics",
            details={"sum": str(total)},
        )
    expected: Number = 0
    survive: Number = 1
    for i, pi in enumerate(p, start=1):
        expected += i * pi * survive
        survive *= 1 - pi
    upper = sum(i * pi for i, pi in enumerate(p, start=1))
    admissible = all(p[i] >= 2 * p[i + 1] for i in range(len(p) - 1))
    report = ScanLengthReport(expected=expected, upper=upper, admissible=admissible)
    if not report.passed:
        raise DomainError(
            "Scan length exceeds its bound",
            component="combinatorics",
            details={"expected": str(expected), "upper": str(upper), "admissible": admissible},
        )
    return report


def root_red_expectation(n: int, r: int) -> Fraction:
    """Expected red roots of an n-key binomial queue with r red keys on top."""
    if n < 0 or not 0 <= r <= n:
        raise DomainError("Need 0 <= r <= n", component="combinatorics", details={"n": n, "r": r})
    expectation = Fraction(0)
    for s in range(n.bit_length()):
        if n >> s & 1:
            size = 1 << s
            expectation += 1 - Fraction(binom(n - r, size), binom(n, size))
    return expectation


def popmax_bound(n: int, r: int) -> Fraction:
    """2 R(n, r) - R(n-1, r-1) with R the expected red-root count."""
    if n < 1 or not 1 <= r <= n:
        raise DomainError("Need 1 <= r <= n", component="combinatorics", details={"n": n, "r": r})
    return 2 * root_red_expectation(n, r) - root_red_expectation(n - 1, r - 1)


def root_red_table(n: int) -> RecurrenceTable:
    return RecurrenceTable("root_red", {r: root_red_expectation(n, r) for r in range(n + 1)})


def binomial_ratio_check(n_max: int) -> CheckReport:
    """Ordered-join B_n / B_(n-1) is n or n/2 for 1 <= n <= n_max."""
    failures = []
    for n in range(1, n_max + 1):
        ratio = Fraction(binomial_queue_count(n, "ordered-join"), binomial_queue_count(n - 1, "ordered-join"))
        if ratio not in (n, Fraction(n, 2)):
            failures.append(n)
    return CheckReport(
        name="binomial_ratio",
        passed=not failures,
        checked=n_max,
        worst_index=failures[0] if failures else None,
        details={"failures": failures},
    )
