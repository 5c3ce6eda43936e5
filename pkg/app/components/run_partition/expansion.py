"""
Almost-binary expansions n = sum(2^s_k - 1).

Valid expansions have non-increasing exponents, at most one equal adjacent pair
(only in the last two places), and a dominance condition. Two readings of
dominance are supported:

- "tail": every term is at least the sum of all later terms (used by the sorter)
- "head": every term is at least the sum of all earlier terms
"""

from typing import List, Literal, Tuple

from app.components.base.exceptions import DomainError

from .models import Expansion

Reading = Literal["tail", "head"]


def almost_binary_expansion(n: int) -> Expansion:
    """Greedy expansion: largest 2^s - 1 <= n at every step.

    The first term of any tail-dominant expansion must be at least n/2, which
    pins it to the largest admissible block; the result is therefore unique.
    n = 0 yields the empty expansion.
    """
    if n < 0:
        raise DomainError("Expansion needs n >= 0", component="run_partition", details={"n": n})
    terms: List[int] = []
    remaining = n
    while remaining > 0:
        s = (remaining + 1).bit_length() - 1
        terms.append(s)
        remaining -= (1 << s) - 1
    return Expansion(tuple(terms))


def is_valid_expansion(terms: Tuple[int, ...], n: int, reading: Reading = "tail") -> bool:
    sizes = [(1 << s) - 1 for s in terms]
    if any(s < 1 for s in terms) or sum(sizes) != n:
        return False
    m = len(terms)
    for k in range(m - 1):
        if terms[k] < terms[k + 1]:
            return False
        if terms[k] == terms[k + 1] and k != m - 2:
            return False
    for k in range(m):
        other = sum(sizes[k + 1 :]) if reading == "tail" else sum(sizes[:k])
        if sizes[k] < other:
            return False
    return True


def expansion_candidates(n: int, reading: Reading = "tail") -> List[Tuple[int, ...]]:
    """Every valid expansion of n under the given dominance reading."""
    results: List[Tuple[int, ...]] = []
    max_s = (n + 1).bit_length()

    def extend(prefix: List[int], remaining: int, prefix_sum: int) -> None:
        if remaining == 0:
            if prefix and is_valid_expansion(tuple(prefix), n, reading):
                results.append(tuple(prefix))
            return
        top = prefix[-1] if prefix else max_s
        for s in range(min(top, max_s), 0, -1):
            size = (1 << s) - 1
            if size > remaining:
                continue
            if reading == "tail" and size < remaining - size:
                # later terms are no larger than this one, so tail dominance fails deeper down too
                break
            if reading == "head" and size < prefix_sum:
                break
            prefix.append(s)
            extend(prefix, remaining - size, prefix_sum + size)
            prefix.pop()

    extend([], n, 0)
    return results
