from .models import ColorClass, Key, Phase, RedRange, Segment, StringKey, TallySheet, keys_from_ranks
from .comparator import ComparisonProbe, classify, compare, retally
from .rng import SplitMix64, shuffle, trial_seed
from .strings import QuicksortResult, instrumented_quicksort, string_compare, unit_compare

__all__ = [
    "ColorClass",
    "Key",
    "Phase",
    "RedRange",
    "Segment",
    "StringKey",
    "TallySheet",
    "keys_from_ranks",
    "ComparisonProbe",
    "classify",
    "compare",
    "retally",
    "SplitMix64",
    "shuffle",
    "trial_seed",
    "QuicksortResult",
    "instrumented_quicksort",
    "string_compare",
    "unit_compare",
]
