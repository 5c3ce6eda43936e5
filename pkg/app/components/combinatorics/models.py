from typing import Dict, List

from pydantic import BaseModel, Field


TABLE_NAMES = (
    "heap_count",
    "binomial_ordered",
    "binomial_distinct",
    "c_upper",
    "c_exact",
    "alt_split",
    "split_P",
    "split_T",
    "h_coefficients",
    "g_recurrence_full",
    "g_recurrence_inner",
    "g_closed",
    "root_red",
)


class TableRequest(BaseModel):
    """Request for one named table up to an index bound."""
    name: str
    max: int = Field(default=16, ge=0)


class TableResponse(BaseModel):
    """Table rows with values rendered as exact strings (floats fixed-point)."""
    name: str
    max: int
    exact: bool
    rows: List[Dict[str, str]]
