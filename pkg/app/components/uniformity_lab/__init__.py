from .census import (
    DistributionCensus,
    PopCensus,
    census_binomial_build,
    census_binomial_popmax,
    census_buildheap,
    expected_heap_multiplicity,
    heap_signature,
)
from .pointer_heap import PointerHeap, PointerNode, insert_alternate, pop_max
from .stats import ChiSquareResult, chi_square_test, pool_cells, split_law_test
from .mature import MaturePhaseReport, build_alternate, mature_phase_census, sample_left_sizes
from .models import CHECK_NAMES, VerifyRequest, VerifyResponse
from .service import UniformityLabService
from .router import router

__all__ = [
    "DistributionCensus",
    "PopCensus",
    "census_binomial_build",
    "census_binomial_popmax",
    "census_buildheap",
    "expected_heap_multiplicity",
    "heap_signature",
    "PointerHeap",
    "PointerNode",
    "insert_alternate",
    "pop_max",
    "ChiSquareResult",
    "chi_square_test",
    "pool_cells",
    "split_law_test",
    "MaturePhaseReport",
    "build_alternate",
    "mature_phase_census",
    "sample_left_sizes",
    "CHECK_NAMES",
    "VerifyRequest",
    "VerifyResponse",
    "UniformityLabService",
    "router",
]
