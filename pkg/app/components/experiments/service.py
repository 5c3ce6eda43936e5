from app.components.base.component import BaseComponent
from app.components.base.config import get_settings
from app.components.base.exceptions import ExperimentConfigError

from .models import ExperimentConfig, ExperimentResponse
from .runner import run_experiment

# Request-path runs are kept small; larger sweeps go through the CLI.
MAX_API_WORK = 2_000_000


class ExperimentService(BaseComponent[ExperimentConfig, ExperimentResponse]):
    """Runs a sorting experiment and returns its aggregate points and fit."""

    def __init__(self):
        self.config = get_settings()

    @property
    def component_name(self) -> str:
        return "experiments"

    async def process(self, request: ExperimentConfig) -> ExperimentResponse:
        work = request.n * request.trials * max(1, len(request.r_sweep))
        if work > MAX_API_WORK:
            raise ExperimentConfigError(
                "Experiment too large for a request; use the command line",
                component=self.component_name,
                details={"work": work, "limit": MAX_API_WORK},
            )
        if request.out:
            raise ExperimentConfigError("Output files are written by the command line only", component=self.component_name)
        result = run_experiment(request, self.config.csv_decimals)
        return ExperimentResponse(config=request, points=result.points, fit=result.fit, failures=result.failures)
