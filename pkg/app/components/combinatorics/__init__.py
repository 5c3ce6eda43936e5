from .tables import RecurrenceTable, binom, dyadic_binomial_row, pascal_row, render
from .counts import binomial_count_table, binomial_queue_count, heap_count, heap_count_table, left_subtree_size
from .splits import (
    CrossingReport,
    alt_model_split,
    crossing_window,
    normalization_failures,
    preservation_identity_holds,
    split_probability_P,
    split_probability_T,
)
from .recurrences import (
    c_is_increasing,
    c_recurrence,
    c_sweep,
    c_table,
    g_closed_form,
    g_recurrence,
    g_table,
    h_coefficient,
    h_coefficients,
    h_residual_range,
)
from .checks import (
    CheckReport,
    ScanLengthReport,
    appendix_sum_bound_check,
    binomial_ratio_check,
    drift_bound,
    g_concavity_check,
    g_ratio_check,
    h_residual_check,
    integral_approximation,
    popmax_bound,
    root_red_expectation,
    scan_length_bound,
)
from .models import TABLE_NAMES, TableRequest, TableResponse
from .service import CombinatoricsService
from .router import router

__all__ = [
    "RecurrenceTable",
    "binom",
    "dyadic_binomial_row",
    "pascal_row",
    "render",
    "binomial_count_table",
    "binomial_queue_count",
    "heap_count",
    "heap_count_table",
    "left_subtree_size",
    "CrossingReport",
    "alt_model_split",
    "crossing_window",
    "normalization_failures",
    "preservation_identity_holds",
    "split_probability_P",
    "split_probability_T",
    "c_is_increasing",
    "c_recurrence",
    "c_sweep",
    "c_table",
    "g_closed_form",
    "g_recurrence",
    "g_table",
    "h_coefficient",
    "h_coefficients",
    "h_residual_range",
    "CheckReport",
    "ScanLengthReport",
    "appendix_sum_bound_check",
    "binomial_ratio_check",
    "drift_bound",
    "g_concavity_check",
    "g_ratio_check",
    "h_residual_check",
    "integral_approximation",
    "popmax_bound",
    "root_red_expectation",
    "scan_length_bound",
    "TABLE_NAMES",
    "TableRequest",
    "TableResponse",
    "CombinatoricsService",
    "router",
]
