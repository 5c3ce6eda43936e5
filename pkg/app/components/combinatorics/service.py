from typing import Callable, Dict

from app.components.base.component import BaseComponent
from app.components.base.config import get_settings
from app.components.base.exceptions import DomainError

from .checks import root_red_table
from .counts import binomial_count_table, heap_count_table
from .models import TABLE_NAMES, TableRequest, TableResponse
from .recurrences import c_table, g_table, h_table
from .splits import alt_split_table, split_P_table, split_T_table
from .tables import RecurrenceTable


# Tables whose exact values grow quadratically in size; bounded by exact_table_cap.
_CAPPED = {"c_upper", "c_exact", "g_recurrence_full", "g_recurrence_inner", "split_P"}


class CombinatoricsService(BaseComponent[TableRequest, TableResponse]):
    """Builds the named exact tables."""

    def __init__(self):
        self.config = get_settings()
        self._builders: Dict[str, Callable[[int], RecurrenceTable]] = {
            "heap_count": heap_count_table,
            "binomial_ordered": lambda n: binomial_count_table(n, "ordered-join"),
            "binomial_distinct": lambda n: binomial_count_table(n, "distinct-structure"),
            "c_upper": lambda n: c_table(n, "upper"),
            "c_exact": lambda n: c_table(n, "exact"),
            "alt_split": alt_split_table,
            "split_P": split_P_table,
            "split_T": split_T_table,
            "h_coefficients": lambda n: h_table(n, self.config.h_coefficient_tail),
            "g_recurrence_full": lambda n: g_table(n, "recurrence", "full"),
            "g_recurrence_inner": lambda n: g_table(n, "recurrence", "inner"),
            "g_closed": lambda n: g_table(n, "closed-form"),
            "root_red": root_red_table,
        }

    @property
    def component_name(self) -> str:
        return "combinatorics"

    def build(self, name: str, max_index: int) -> RecurrenceTable:
        if name not in self._builders:
            raise DomainError(
                f"Unknown table {name!r}",
                component=self.component_name,
                details={"known": list(TABLE_NAMES)},
            )
        if name in _CAPPED and max_index > self.config.exact_table_cap:
            raise DomainError(
                f"Table {name} is capped at {self.config.exact_table_cap}",
                component=self.component_name,
                details={"max": max_index},
            )
        table = self._builders[name](max_index)
        self.log.info("table_built", table=name, max=max_index, entries=len(table))
        return table

    async def process(self, request: TableRequest) -> TableResponse:
        table = self.build(request.name, request.max)
        return TableResponse(
            name=table.name,
            max=request.max,
            exact=table.exact,
            rows=table.rows(self.config.csv_decimals),
        )
