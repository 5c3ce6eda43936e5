"""
Seed-deterministic randomness for experiments.

SplitMix64, bit-exact:

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output z ^ (z >> 31)

`below(bound)` draws uniformly from [0, bound) by rejecting outputs under
(2^64 - bound) mod bound, then reducing modulo bound.
"""

from typing import List, Sequence, TypeVar

from app.components.base.exceptions import DomainError

T = TypeVar("T")

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """64-bit SplitMix generator."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def __call__(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        if bound <= 0:
            raise DomainError("bound must be positive", component="probe", details={"bound": bound})
        threshold = ((1 << 64) - bound) % bound
        while True:
            x = self()
            if x >= threshold:
                return x % bound

    def coin(self) -> int:
        return self() >> 63


def trial_seed(seed: int, trial: int) -> int:
    """Per-trial seed; independent of scheduling order."""
    return (seed ^ trial) & MASK64


def shuffle(items: Sequence[T], seed: int) -> List[T]:
    """Fisher-Yates shuffle into a new list."""
    out = list(items)
    rng = SplitMix64(seed)
    for i in range(len(out) - 1, 0, -1):
        j = rng.below(i + 1)
        out[i], out[j] = out[j], out[i]
    return out
