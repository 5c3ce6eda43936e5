"""Exact tables and binomial helpers."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Any, Dict, Hashable, List, Mapping, Tuple, Union

Exact = Union[int, Fraction]
TableValue = Union[int, Fraction, float]


def binom(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=4096)
def pascal_row(n: int) -> Tuple[int, ...]:
    """Row n of Pascal's triangle, [C(n,0), ..., C(n,n)]."""
    row = [1]
    for k in range(1, n + 1):
        row.append(row[-1] * (n - k + 1) // k)
    return tuple(row)


def dyadic_binomial_row(n: int) -> Tuple[Fraction, ...]:
    """C(n, k) / 2^n for k = 0..n."""
    denominator = 1 << n
    return tuple(Fraction(c, denominator) for c in pascal_row(n))


def render(value: Any, decimals: int = 6) -> str:
    """Integers and fractions exactly, floats with fixed decimals."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return f"{value:.{decimals}f}"
    return str(value)


@dataclass(frozen=True)
class RecurrenceTable:
    """Named, immutable table of exact (or flagged numeric) values."""

    name: str
    values: Mapping[Hashable, TableValue] = field(default_factory=dict)
    exact: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", MappingProxyType(dict(self.values)))

    def __getitem__(self, index: Hashable) -> TableValue:
        return self.values[index]

    def __len__(self) -> int:
        return len(self.values)

    def rows(self, decimals: int = 6) -> List[Dict[str, str]]:
        out = []
        for index, value in self.values.items():
            if isinstance(index, tuple):
                label = ",".join(str(part) for part in index)
            else:
                label = str(index)
            out.append({"table": self.name, "index": label, "value": render(value, decimals)})
        return out
