from typing import Callable, Dict

from app.components.base.component import BaseComponent
from app.components.base.config import get_settings
from app.components.base.exceptions import DomainError
from app.components.combinatorics.checks import (
    appendix_sum_bound_check,
    binomial_ratio_check,
    g_concavity_check,
    h_residual_check,
)
from app.components.combinatorics.counts import heap_count
from app.components.combinatorics.recurrences import c_is_increasing
from app.components.combinatorics.splits import crossing_window, normalization_failures, preservation_identity_holds

from .census import (
    census_binomial_build,
    census_binomial_popmax,
    census_buildheap,
    expected_heap_multiplicity,
    first_difference,
)
from .mature import mature_phase_census, sample_left_sizes
from .models import CHECK_NAMES, VerifyRequest, VerifyResponse
from .stats import split_law_test


class UniformityLabService(BaseComponent[VerifyRequest, VerifyResponse]):
    """Runs the named verification checks."""

    def __init__(self):
        self.config = get_settings()
        self._checks: Dict[str, Callable[[VerifyRequest], VerifyResponse]] = {
            "buildheap-uniform": self._buildheap_uniform,
            "binomial-build-uniform": self._binomial_build_uniform,
            "binomial-pop-uniform": self._binomial_pop_uniform,
            "alt-split": self._alt_split,
            "preservation": self._preservation,
            "mature-phase": self._mature_phase,
            "c-monotone": self._c_monotone,
            "h-residual": self._report(lambda n: h_residual_check(n, self.config.h_coefficient_tail)),
            "g-concavity": self._report(lambda n: g_concavity_check(n, self.config.h_coefficient_tail)),
            "appendix-bound": self._report(appendix_sum_bound_check),
            "normalization": self._normalization,
            "crossing": self._crossing,
            "binomial-ratio": self._report(binomial_ratio_check),
        }

    @property
    def component_name(self) -> str:
        return "uniformity_lab"

    async def process(self, request: VerifyRequest) -> VerifyResponse:
        return self.run(request)

    def run(self, request: VerifyRequest) -> VerifyResponse:
        if request.check not in self._checks:
            raise DomainError(
                f"Unknown check {request.check!r}",
                component=self.component_name,
                details={"known": list(CHECK_NAMES)},
            )
        response = self._checks[request.check](request)
        self.log.info("check_completed", check=request.check, n=request.n, passed=response.passed)
        return response

    def _trials(self, request: VerifyRequest) -> int:
        return request.trials or self.config.default_trials

    def _seed(self, request: VerifyRequest) -> int:
        return self.config.seed if request.seed is None else request.seed

    def _report(self, check: Callable) -> Callable[[VerifyRequest], VerifyResponse]:
        def run(request: VerifyRequest) -> VerifyResponse:
            report = check(request.n)
            return VerifyResponse(check=request.check, n=request.n, passed=report.passed, summary=report.to_dict())

        return run

    def _buildheap_uniform(self, request: VerifyRequest) -> VerifyResponse:
        census = census_buildheap(request.n, self.config.buildheap_census_cap, self.config.jobs)
        H = heap_count(request.n)
        multiplicity = expected_heap_multiplicity(request.n, H)
        mismatch = first_difference(census, multiplicity)
        passed = multiplicity > 0 and census.distinct == H and mismatch is None
        summary = {**census.summary(), "heap_count": H, "multiplicity": multiplicity, "first_mismatch": mismatch}
        return VerifyResponse(check=request.check, n=request.n, passed=passed, summary=summary, rows=census.rows())

    def _binomial_build_uniform(self, request: VerifyRequest) -> VerifyResponse:
        census = census_binomial_build(request.n, self.config.binomial_census_cap)
        return VerifyResponse(
            check=request.check,
            n=request.n,
            passed=census.is_uniform,
            summary=census.summary(),
            rows=census.rows(),
        )

    def _binomial_pop_uniform(self, request: VerifyRequest) -> VerifyResponse:
        result = census_binomial_popmax(request.n, self.config.binomial_census_cap)
        if not result.preserves_uniformity:
            self.log.warning(
                "pop_uniformity_deviation",
                n=request.n,
                ratio=str(result.census.ratio),
                missing=result.missing,
            )
        summary = {
            **result.census.summary(),
            "configurations": result.expected,
            "missing": result.missing,
            "preserves_uniformity": result.preserves_uniformity,
            "informational": True,
        }
        # deviation is reported, never failed
        return VerifyResponse(
            check=request.check,
            n=request.n,
            passed=True,
            summary=summary,
            rows=result.census.rows(),
        )

    def _alt_split(self, request: VerifyRequest) -> VerifyResponse:
        if request.n < 2:
            raise DomainError("Split law needs N >= 2", component=self.component_name, details={"n": request.n})
        sizes = sample_left_sizes(request.n, self._trials(request), self._seed(request))
        result = split_law_test(sizes, request.n, self.config.chi_square_alpha)
        summary = {
            "trials": len(sizes),
            "statistic": result.statistic,
            "p_value": result.p_value,
            "dof": result.dof,
            "alpha": result.alpha,
        }
        return VerifyResponse(check=request.check, n=request.n, passed=result.passed, summary=summary)

    def _preservation(self, request: VerifyRequest) -> VerifyResponse:
        failures = [N for N in range(1, request.n + 1) if not preservation_identity_holds(N)]
        return VerifyResponse(
            check=request.check,
            n=request.n,
            passed=not failures,
            summary={"checked": request.n, "failures": failures},
        )

    def _mature_phase(self, request: VerifyRequest) -> VerifyResponse:
        report = mature_phase_census(request.n, self._trials(request), self._seed(request))
        return VerifyResponse(check=request.check, n=request.n, passed=report.within_bound, summary=report.to_dict())

    def _c_monotone(self, request: VerifyRequest) -> VerifyResponse:
        summary = {"upper": c_is_increasing(request.n, "upper"), "exact": c_is_increasing(request.n, "exact")}
        return VerifyResponse(check=request.check, n=request.n, passed=all(summary.values()), summary=summary)

    def _normalization(self, request: VerifyRequest) -> VerifyResponse:
        failures = normalization_failures(request.n)
        return VerifyResponse(
            check=request.check,
            n=request.n,
            passed=not failures,
            summary={"failures": [list(f) for f in failures]},
        )

    def _crossing(self, request: VerifyRequest) -> VerifyResponse:
        rows = []
        for m in range(request.n + 1):
            for r in range(min(2 * m + 1, 20) + 1):
                report = crossing_window(m, r)
                rows.append(
                    {
                        "m": m,
                        "r": r,
                        "lo": report.window[0] if report.window else None,
                        "hi": report.window[1] if report.window else None,
                        "delta": report.delta,
                        "holds": report.holds,
                    }
                )
        failures = sum(1 for row in rows if not row["holds"])
        return VerifyResponse(
            check=request.check,
            n=request.n,
            passed=failures == 0,
            summary={"cases": len(rows), "failures": failures, "max_delta": max(row["delta"] for row in rows)},
            rows=rows,
        )
