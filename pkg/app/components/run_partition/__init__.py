from .models import Expansion, Run
from .expansion import almost_binary_expansion, expansion_candidates, is_valid_expansion
from .modified import heapsort_modified, merge_runs, merge_two, pad_with_dummies, sort_block

__all__ = [
    "Expansion",
    "Run",
    "almost_binary_expansion",
    "expansion_candidates",
    "is_valid_expansion",
    "heapsort_modified",
    "merge_runs",
    "merge_two",
    "pad_with_dummies",
    "sort_block",
]
