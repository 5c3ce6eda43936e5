from dataclasses import dataclass, field
from typing import List, Tuple

from app.components.probe.models import Key


@dataclass(frozen=True)
class Expansion:
    """Exponents s_1 >= s_2 >= ... with n = sum(2^s_k - 1)."""

    terms: Tuple[int, ...] = ()

    @property
    def block_sizes(self) -> List[int]:
        return [(1 << s) - 1 for s in self.terms]

    @property
    def total(self) -> int:
        return sum(self.block_sizes)

    def __len__(self) -> int:
        return len(self.terms)


@dataclass
class Run:
    """Ascending keys produced by sorting one block."""

    keys: List[Key] = field(default_factory=list)
    block_size: int = 0
