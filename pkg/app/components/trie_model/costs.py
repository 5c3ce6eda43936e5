"""Per-node cost functions and the trie-sum prediction."""

import math
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, Mapping, Union

import pandas as pd

from app.components.base.exceptions import CorpusError, DomainError

from .trie import PrefixTrie

Number = Union[int, float, Fraction]
CostFunction = Callable[[int], Number]


def harmonic(n: int) -> Fraction:
    return sum((Fraction(1, i) for i in range(1, n + 1)), Fraction(0))


def quicksort_cost(n: int) -> Fraction:
    """Expected Quicksort comparisons on n keys: 2(n+1)H_n - 4n."""
    if n < 0:
        raise DomainError("n must be non-negative", component="trie_model", details={"n": n})
    return 2 * (n + 1) * harmonic(n) - 4 * n


def nlogn_cost(n: int) -> float:
    """n log2 n, zero at n <= 1."""
    if n < 0:
        raise DomainError("n must be non-negative", component="trie_model", details={"n": n})
    return n * math.log2(n) if n > 1 else 0.0


def table_cost(table: Mapping[int, Number]) -> CostFunction:
    """Cost looked up from measured values; thickness 1 and 0 cost nothing if absent."""

    def cost(n: int) -> Number:
        if n in table:
            return table[n]
        if n <= 1:
            return 0
        raise DomainError(f"No cost recorded for n={n}", component="trie_model", details={"n": n})

    return cost


def load_cost_table(path: Path) -> CostFunction:
    """CSV with columns n,cost."""
    try:
        frame = pd.read_csv(path)
    except (OSError, pd.errors.ParserError) as e:
        raise CorpusError(f"Unreadable cost table: {e}", component="trie_model", details={"path": str(path)})
    if not {"n", "cost"} <= set(frame.columns):
        raise CorpusError("Cost table needs columns n,cost", component="trie_model", details={"path": str(path)})
    return table_cost({int(n): float(c) for n, c in zip(frame["n"], frame["cost"])})


COST_FUNCTIONS: Dict[str, CostFunction] = {"Q": quicksort_cost, "R": nlogn_cost}


def resolve_cost(name: str) -> CostFunction:
    if name in COST_FUNCTIONS:
        return COST_FUNCTIONS[name]
    path = Path(name)
    if path.suffix == ".csv":
        return load_cost_table(path)
    raise DomainError(
        f"Unknown cost function {name!r}",
        component="trie_model",
        details={"known": sorted(COST_FUNCTIONS)},
    )


def predict_cost(trie: PrefixTrie, f: CostFunction = quicksort_cost) -> Number:
    """Sum of f(thickness) over every node, the root included."""
    return sum((f(node.thickness) for node in trie), 0)
