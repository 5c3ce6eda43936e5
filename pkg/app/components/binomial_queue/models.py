from dataclasses import dataclass
from typing import Tuple

from app.components.probe.models import Key


@dataclass(frozen=True)
class BinomialTree:
    """Heap-ordered binomial tree; children ordered by descending size."""

    root_key: Key
    children: Tuple["BinomialTree", ...] = ()
    size: int = 1

    @classmethod
    def singleton(cls, key: Key) -> "BinomialTree":
        return cls(root_key=key)

    @property
    def order(self) -> int:
        return self.size.bit_length() - 1

    def keys(self) -> list:
        out = [self.root_key]
        for child in self.children:
            out.extend(child.keys())
        return out


@dataclass(frozen=True)
class RootList:
    """Binomial queue: trees stored in strictly increasing size."""

    trees: Tuple[BinomialTree, ...] = ()

    @property
    def count(self) -> int:
        return sum(tree.size for tree in self.trees)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(tree.size for tree in self.trees)

    def __len__(self) -> int:
        return len(self.trees)

    def without(self, index: int) -> "RootList":
        return RootList(self.trees[:index] + self.trees[index + 1 :])
