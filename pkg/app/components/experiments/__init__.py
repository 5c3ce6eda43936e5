from .models import ALGORITHMS, ExperimentConfig, ExperimentResponse, FitResult, build_config
from .fitting import fit_power_law, fit_quadratic, fit_r_log_r
from .output import summary_path, write_csv
from .presets import get_preset, load_presets
from .runner import (
    SORTERS,
    AdversarialReport,
    BuildPhaseReport,
    ExperimentResult,
    RootListPoint,
    TriePredictionReport,
    binomial_bound_line,
    heapsort_envelope,
    predict_and_measure,
    run_adversarial_experiment,
    run_buildphase_experiment,
    run_experiment,
    run_rootlist_experiment,
    run_trial,
)
from .service import ExperimentService
from .router import router

__all__ = [
    "ALGORITHMS",
    "ExperimentConfig",
    "ExperimentResponse",
    "FitResult",
    "build_config",
    "fit_power_law",
    "fit_quadratic",
    "fit_r_log_r",
    "summary_path",
    "write_csv",
    "get_preset",
    "load_presets",
    "SORTERS",
    "AdversarialReport",
    "BuildPhaseReport",
    "ExperimentResult",
    "RootListPoint",
    "TriePredictionReport",
    "binomial_bound_line",
    "heapsort_envelope",
    "predict_and_measure",
    "run_adversarial_experiment",
    "run_buildphase_experiment",
    "run_experiment",
    "run_rootlist_experiment",
    "run_trial",
    "ExperimentService",
    "router",
]
