"""
Recurrences of the coin-flip heap model and the good-comparison count G.

C_N (expected sift-down comparisons when the hole starts at a root of an
N-node coin-flip heap):

    upper: C_N = 1 + sum_{k=0}^{N-2} C(N-2,k) C_{k+1} / 2^(N-2)
    exact: C_N = 1 - 2^(2-N) + sum_{k=0}^{N-2} C(N-2,k) C_{k+1} / 2^(N-2)

with C_0 = C_1 = C_2 = 0. Both are dyadic rationals and are kept as
(numerator, exponent) pairs; float sweeps use binomial pmf weights.

G(N) = N + sum_k C(N,k) (G(k) + G(N-k)) / 2^N with G(0..2) = 0, summed over
k in [0, N] ("full", the k = 0 and k = N terms moved to the left side) or
k in [1, N-1] ("inner"). The closed form evaluated beside it is
G(N) = N * sum_{j>=0} (1 - (1 - 2^-j)^(N-1)).
"""

import math
from fractions import Fraction
from typing import Dict, List, Literal, Optional, Tuple

import numpy as np
from scipy.stats import binom as binom_dist

from app.components.base.exceptions import DomainError

from .tables import RecurrenceTable, binom, pascal_row

CVariant = Literal["upper", "exact"]
GVariant = Literal["recurrence", "closed-form"]
SumRange = Literal["full", "inner"]

_Dyadic = Tuple[int, int]  # value = numerator / 2^exponent

_C_TABLES: Dict[str, List[_Dyadic]] = {"upper": [(0, 0)] * 3, "exact": [(0, 0)] * 3}


def _reduce(numerator: int, exponent: int) -> _Dyadic:
    if numerator == 0:
        return (0, 0)
    shift = min((numerator & -numerator).bit_length() - 1, exponent)
    return (numerator >> shift, exponent - shift)


def _extend_c(variant: CVariant, N: int) -> None:
    table = _C_TABLES[variant]
    while len(table) <= N:
        m = len(table)
        previous = table[1:m]  # C_1 .. C_{m-1}
        row = pascal_row(m - 2)
        top = max(exponent for _, exponent in previous)
        total = sum(c * (a << (top - e)) for c, (a, e) in zip(row, previous))
        exponent = top + m - 2
        numerator = (1 << exponent) + total
        if variant == "exact":
            numerator -= 1 << top
        table.append(_reduce(numerator, exponent))


def c_recurrence(N: int, variant: CVariant = "upper") -> Fraction:
    if N < 0:
        raise DomainError("N must be non-negative", component="combinatorics", details={"N": N})
    if variant not in _C_TABLES:
        raise DomainError(f"Unknown C variant {variant!r}", component="combinatorics")
    _extend_c(variant, N)
    numerator, exponent = _C_TABLES[variant][N]
    return Fraction(numerator, 1 << exponent)


def c_table(N_max: int, variant: CVariant = "upper") -> RecurrenceTable:
    name = "c_upper" if variant == "upper" else "c_exact"
    return RecurrenceTable(name, {N: c_recurrence(N, variant) for N in range(N_max + 1)})


def c_sweep(N_max: int, variant: CVariant = "upper") -> np.ndarray:
    """Float evaluation of C_0..C_{N_max}."""
    values = np.zeros(max(N_max + 1, 3))
    for m in range(3, N_max + 1):
        weights = binom_dist.pmf(np.arange(m - 1), m - 2, 0.5)
        values[m] = 1.0 + float(weights @ values[1:m])
        if variant == "exact":
            values[m] -= 2.0 ** (2 - m)
    return values[: N_max + 1]


def c_is_increasing(N_max: int, variant: CVariant = "upper") -> bool:
    """C_N strictly increasing from N = 2 on."""
    values = c_sweep(N_max, variant)
    return bool(np.all(np.diff(values[2:]) > 0))


def h_tail_cap(k: int, tail: float) -> int:
    """Smallest J with k * 2^-J below `tail`; the sum beyond J is at most that."""
    if k <= 0:
        return 0
    return int(math.floor(math.log2(k / tail))) + 1


def _h_terms(ks: np.ndarray, j_cap: int) -> np.ndarray:
    js = np.arange(j_cap + 1, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        logs = np.log1p(-np.exp2(-js))
        terms = -np.expm1(ks[:, None] * logs[None, :])
    terms[ks == 0, :] = 0.0
    return terms


def h_coefficient(k: int, j_cap: Optional[int] = None, tail: float = 1e-12) -> float:
    """sum_{j>=0} (1 - (1 - 2^-j)^k), truncated where the tail drops below `tail`."""
    if k < 0:
        raise DomainError("k must be non-negative", component="combinatorics", details={"k": k})
    needed = h_tail_cap(k, tail)
    if j_cap is None:
        j_cap = needed
    elif j_cap < needed:
        raise DomainError(
            f"Cap {j_cap} leaves a tail above {tail}",
            component="combinatorics",
            details={"k": k, "j_cap": j_cap, "required": needed},
        )
    return float(_h_terms(np.array([k], dtype=float), j_cap).sum())


def h_coefficients(ks: np.ndarray, tail: float = 1e-12, chunk: int = 65536) -> np.ndarray:
    ks = np.asarray(ks, dtype=float)
    out = np.empty(len(ks))
    j_cap = h_tail_cap(int(ks.max()) if len(ks) else 0, tail)
    for start in range(0, len(ks), chunk):
        block = ks[start : start + chunk]
        out[start : start + chunk] = _h_terms(block, j_cap).sum(axis=1)
    return out


def h_residual_range(k_max: int, tail: float = 1e-12) -> Tuple[float, float]:
    """(min, max) of H_k - log2 k over 1 <= k <= k_max."""
    ks = np.arange(1, k_max + 1, dtype=float)
    residual = h_coefficients(ks, tail) - np.log2(ks)
    return float(residual.min()), float(residual.max())


def h_table(k_max: int, tail: float = 1e-12) -> RecurrenceTable:
    values = h_coefficients(np.arange(k_max + 1), tail)
    return RecurrenceTable("h_coefficients", {k: float(v) for k, v in enumerate(values)}, exact=False)


def g_recurrence(N_max: int, sum_range: SumRange = "full") -> List[Fraction]:
    values: List[Fraction] = [Fraction(0)] * min(N_max + 1, 3)
    for N in range(3, N_max + 1):
        inner = sum((binom(N, k) * values[k] for k in range(1, N)), Fraction(0))
        scale = Fraction(1, 1 << N)
        if sum_range == "full":
            values.append((N + 2 * inner * scale) / (1 - 2 * scale))
        elif sum_range == "inner":
            values.append(N + 2 * inner * scale)
        else:
            raise DomainError(f"Unknown sum range {sum_range!r}", component="combinatorics")
    return values


def g_closed_form(N_max: int, tail: float = 1e-12) -> np.ndarray:
    Ns = np.arange(N_max + 1, dtype=float)
    H = h_coefficients(np.maximum(Ns - 1, 0), tail)
    return Ns * H


def g_table(
    N_max: int,
    variant: GVariant = "closed-form",
    sum_range: SumRange = "full",
) -> RecurrenceTable:
    if variant == "recurrence":
        name = "g_recurrence_full" if sum_range == "full" else "g_recurrence_inner"
        return RecurrenceTable(name, dict(enumerate(g_recurrence(N_max, sum_range))))
    if variant == "closed-form":
        values = g_closed_form(N_max)
        return RecurrenceTable("g_closed", {N: float(v) for N, v in enumerate(values)}, exact=False)
    raise DomainError(f"Unknown G variant {variant!r}", component="combinatorics")
