from dataclasses import dataclass, field
from typing import Iterable, List, Optional

from app.components.probe.models import Key


@dataclass
class HeapArray:
    """1-indexed array-backed binary max-heap.

    `slots[0]` is never used; positions 1..heap_size are live. Slots past
    heap_size hold popped keys (classic Heapsort) or stay as padding.
    """

    slots: List[Optional[Key]] = field(default_factory=lambda: [None])
    heap_size: int = 0

    @classmethod
    def from_keys(cls, keys: Iterable[Key]) -> "HeapArray":
        slots: List[Optional[Key]] = [None]
        slots.extend(keys)
        return cls(slots=slots, heap_size=len(slots) - 1)

    @property
    def capacity(self) -> int:
        return len(self.slots) - 1

    def live(self) -> List[Key]:
        return [key for key in self.slots[1 : self.heap_size + 1]]

    def ranks(self) -> List[int]:
        return [key.rank for key in self.live()]

    def swap(self, i: int, j: int) -> None:
        self.slots[i], self.slots[j] = self.slots[j], self.slots[i]

    def is_heap(self) -> bool:
        """Heap-order predicate over the live positions (uncounted)."""
        for i in range(2, self.heap_size + 1):
            if self.slots[i // 2].rank < self.slots[i].rank:
                return False
        return True


def parent(i: int) -> int:
    return i // 2


def left(i: int) -> int:
    return 2 * i


def right(i: int) -> int:
    return 2 * i + 1
