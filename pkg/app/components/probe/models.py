from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, ClassVar, Dict, List, Optional, Sequence

from app.components.base.exceptions import InvalidRedRangeError


class Phase(str, Enum):
    """Phase label supplied by the call site of every comparison."""

    BUILD = "build"
    SORT = "sort"
    MERGE = "merge"
    FIND_MAX = "find-max"
    POP_MERGE = "pop-merge"


class ColorClass(str, Enum):
    RED_RED = "red_red"
    RED_BLUE = "red_blue"
    BLUE_BLUE = "blue_blue"
    DUMMY = "dummy"


class Segment(str, Enum):
    """Heap maturity during a pop: root blue (premature) or red (mature)."""

    PREMATURE = "premature"
    MATURE = "mature"


@dataclass(frozen=True, slots=True)
class Key:
    """A sortable element.

    Real keys carry ranks 0..n-1. Dummy keys carry negative ranks, so a dummy
    compares below every real key and dummies created later compare below
    earlier ones.
    """

    value: Any
    rank: int
    is_dummy: bool = False

    @classmethod
    def real(cls, rank: int) -> "Key":
        return cls(value=rank, rank=rank)

    @classmethod
    def dummy(cls, creation_index: int) -> "Key":
        return cls(value=None, rank=-1 - creation_index, is_dummy=True)


def keys_from_ranks(ranks: Sequence[int]) -> List[Key]:
    return [Key.real(rank) for rank in ranks]


@dataclass(frozen=True, slots=True)
class RedRange:
    """Order-consecutive block of ranks [lo, lo + length)."""

    lo: int
    length: int

    def __post_init__(self) -> None:
        if self.lo < 0 or self.length < 0:
            raise InvalidRedRangeError(
                "Red range bounds must be non-negative",
                component="probe",
                details={"lo": self.lo, "len": self.length},
            )

    @classmethod
    def top(cls, n: int, r: int) -> "RedRange":
        """The r largest ranks of an n-element instance."""
        return cls.for_instance(n=n, r=r, lo=n - r)

    @classmethod
    def for_instance(cls, n: int, r: int, lo: Optional[int] = None) -> "RedRange":
        lo = n - r if lo is None else lo
        if r < 0 or r > n or lo < 0 or lo + r > n:
            raise InvalidRedRangeError(
                f"Red range [{lo}, {lo + r}) does not fit in 0..{n}",
                component="probe",
                details={"n": n, "r": r, "lo": lo},
            )
        return cls(lo=lo, length=r)

    def is_red(self, key: Key) -> bool:
        return not key.is_dummy and self.lo <= key.rank < self.lo + self.length


@dataclass(frozen=True, slots=True)
class StringKey:
    """Byte string compared lexicographically, one symbol at a time."""

    data: bytes

    @classmethod
    def of(cls, text: str) -> "StringKey":
        return cls(text.encode("utf-8"))


@dataclass
class TallySheet:
    """Comparison counters per phase and color class."""

    CSV_COLUMNS: ClassVar[List[str]] = [
        "seed",
        "n",
        "r",
        "lo",
        "algo",
        "phase",
        "red_red",
        "red_blue",
        "blue_blue",
        "dummy",
        "total",
    ]

    counts: Counter = field(default_factory=Counter)
    segments: Counter = field(default_factory=Counter)

    def record(self, phase: Phase, color: ColorClass, segment: Optional[Segment] = None) -> None:
        self.counts[(phase, color)] += 1
        if segment is not None and color is ColorClass.RED_RED:
            self.segments[segment] += 1

    def get(self, phase: Phase, color: ColorClass) -> int:
        return self.counts[(phase, color)]

    def phase_total(self, phase: Phase) -> int:
        return sum(self.counts[(phase, color)] for color in ColorClass)

    def color_total(self, color: ColorClass) -> int:
        return sum(self.counts[(phase, color)] for phase in Phase)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def red_red(self) -> int:
        return self.color_total(ColorClass.RED_RED)

    def absorb(self, other: "TallySheet") -> "TallySheet":
        """Add another run's counters into this sheet."""
        self.counts.update(other.counts)
        self.segments.update(other.segments)
        return self

    def rows(self, seed: int, n: int, r: int, lo: int, algo: str) -> List[Dict[str, Any]]:
        """One CSV row per phase plus an `all` row, in Phase declaration order."""
        rows = []
        for phase in list(Phase) + [None]:
            if phase is None:
                values = {color: self.color_total(color) for color in ColorClass}
                label = "all"
            else:
                values = {color: self.get(phase, color) for color in ColorClass}
                label = phase.value
            rows.append(
                {
                    "seed": seed,
                    "n": n,
                    "r": r,
                    "lo": lo,
                    "algo": algo,
                    "phase": label,
                    "red_red": values[ColorClass.RED_RED],
                    "red_blue": values[ColorClass.RED_BLUE],
                    "blue_blue": values[ColorClass.BLUE_BLUE],
                    "dummy": values[ColorClass.DUMMY],
                    "total": sum(values.values()),
                }
            )
        return rows
