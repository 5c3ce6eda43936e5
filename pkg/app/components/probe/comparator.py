"""
Comparison probe.

Every key comparison made by the sorters goes through `ComparisonProbe.compare`,
which returns the ordering and charges exactly one counter of the current phase.
"""

from __future__ import annotations

from contextlib import contextmanager
from typing import Iterable, Iterator, List, Optional, Tuple

from .models import ColorClass, Key, Phase, RedRange, Segment, TallySheet

Ordering = int  # -1, 0, 1

TraceEntry = Tuple[Phase, Key, Key]


def classify(a: Key, b: Key, red: RedRange) -> ColorClass:
    """Color class of a compared pair; a pure function of the two keys."""
    if a.is_dummy or b.is_dummy:
        return ColorClass.DUMMY
    a_red = red.is_red(a)
    b_red = red.is_red(b)
    if a_red and b_red:
        return ColorClass.RED_RED
    if a_red or b_red:
        return ColorClass.RED_BLUE
    return ColorClass.BLUE_BLUE


def order(a: Key, b: Key) -> Ordering:
    return (a.rank > b.rank) - (a.rank < b.rank)


def compare(a: Key, b: Key, phase: Phase, sheet: TallySheet, red: RedRange) -> Ordering:
    """Compare two keys and charge the comparison to `sheet` under `phase`."""
    sheet.record(phase, classify(a, b, red))
    return order(a, b)


class ComparisonProbe:
    """Instrumentation handle owned by a single run.

    Call sites set the phase (and optionally the maturity segment) before
    comparing; the probe never infers them.
    """

    def __init__(
        self,
        red: RedRange,
        sheet: Optional[TallySheet] = None,
        record_trace: bool = False,
    ):
        self.red = red
        self.sheet = sheet if sheet is not None else TallySheet()
        self.phase = Phase.BUILD
        self.segment: Optional[Segment] = None
        self.trace: Optional[List[TraceEntry]] = [] if record_trace else None

    @classmethod
    def uncolored(cls) -> "ComparisonProbe":
        """Probe with an empty red range, for runs that only need totals."""
        return cls(RedRange(lo=0, length=0))

    def compare(self, a: Key, b: Key) -> Ordering:
        self.sheet.record(self.phase, classify(a, b, self.red), self.segment)
        if self.trace is not None:
            self.trace.append((self.phase, a, b))
        return order(a, b)

    def greater(self, a: Key, b: Key) -> bool:
        return self.compare(a, b) > 0

    def less(self, a: Key, b: Key) -> bool:
        return self.compare(a, b) < 0

    @contextmanager
    def phase_scope(self, phase: Phase) -> Iterator["ComparisonProbe"]:
        previous = self.phase
        self.phase = phase
        try:
            yield self
        finally:
            self.phase = previous

    def mark_segment(self, root: Key) -> None:
        """Label subsequent comparisons by the color of the current root."""
        self.segment = Segment.MATURE if self.red.is_red(root) else Segment.PREMATURE

    def clear_segment(self) -> None:
        self.segment = None


def retally(trace: Iterable[TraceEntry], red: RedRange) -> TallySheet:
    """Rebuild a sheet from a recorded trace."""
    sheet = TallySheet()
    for phase, a, b in trace:
        sheet.record(phase, classify(a, b, red))
    return sheet
