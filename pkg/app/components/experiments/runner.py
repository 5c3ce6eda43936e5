"""
Experiment runners.

Every trial is a pure function of its task tuple; per-trial seeds are
`seed ^ trial`, so results do not depend on how trials are scheduled across
workers. Aggregation happens in the parent process.
"""

import math
from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence

import numpy as np

from app.components.base.exceptions import ExperimentConfigError
from app.components.base.logging import get_logger
from app.components.binomial_queue.queue import binomial_heapsort, build_queue, red_roots
from app.components.combinatorics.checks import drift_bound, popmax_bound, root_red_expectation
from app.components.heap_core.adversarial import (
    adversarial_red_range,
    adversarial_red_red,
    adversarial_size,
    construct_adversarial_heap,
)
from app.components.heap_core.heap import build_heap, floyd_sort_phase, heapsort_classic, heapsort_floyd
from app.components.heap_core.models import HeapArray
from app.components.probe.comparator import ComparisonProbe
from app.components.probe.models import ColorClass, Key, Phase, RedRange, Segment, StringKey, TallySheet, keys_from_ranks
from app.components.probe.rng import shuffle, trial_seed
from app.components.probe.strings import instrumented_quicksort
from app.components.run_partition.expansion import almost_binary_expansion
from app.components.run_partition.modified import heapsort_modified
from app.components.trie_model.costs import predict_cost, resolve_cost
from app.components.trie_model.measure import measure_symbol_cost
from app.components.trie_model.trie import build_trie, reduced_trie

from .fitting import fit_power_law, fit_quadratic, fit_r_log_r
from .models import ExperimentConfig, FitResult
from .output import summary_path, write_csv

logger = get_logger("experiments")


def quicksort_keys(keys: Sequence[Key], probe: ComparisonProbe) -> List[Key]:
    """Reference Quicksort on keys, one probe comparison per pivot test.

    The input is already shuffled by the trial seed; the inner shuffle uses a
    fixed seed.
    """
    with probe.phase_scope(Phase.SORT):
        result = instrumented_quicksort(keys, seed=0, compare=lambda a, b: (probe.compare(a, b), 1))
    return result.keys


SORTERS: Dict[str, Callable[[Sequence[Key], ComparisonProbe], List[Key]]] = {
    "classic": heapsort_classic,
    "floyd": heapsort_floyd,
    "modified": heapsort_modified,
    "binomial": binomial_heapsort,
    "quicksort-strings": quicksort_keys,
}


def heapsort_envelope(n: int) -> tuple:
    """[n log2 n - 2n, 2n log2 n + 2n]."""
    if n < 2:
        return (0.0, 2.0 * n)
    return (n * math.log2(n) - 2 * n, 2 * n * math.log2(n) + 2 * n)


def binomial_bound_line(r: int) -> float:
    """4 r ln r + 8 r."""
    return 4 * r * math.log(r) + 8 * r if r >= 1 else 0.0


def _map(fn: Callable, tasks: List[Any], jobs: int) -> List[Any]:
    if jobs > 1 and len(tasks) > 1:
        with Pool(jobs) as pool:
            return pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * jobs)))
    return [fn(task) for task in tasks]


def _seeds(cfg: ExperimentConfig) -> List[int]:
    return [trial_seed(cfg.seed, t) for t in range(cfg.trials)]


# ---------------------------------------------------------------------------
# Full sorts
# ---------------------------------------------------------------------------


@dataclass
class TrialResult:
    seed: int
    sheet: TallySheet
    sorted_ok: bool


def run_trial(task: tuple) -> TrialResult:
    algo, n, r, lo, seed = task
    keys = shuffle(keys_from_ranks(range(n)), seed)
    probe = ComparisonProbe(RedRange.for_instance(n, r, lo))
    output = SORTERS[algo](keys, probe)
    return TrialResult(seed, probe.sheet, [key.rank for key in output] == list(range(n)))


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    rows: List[Dict[str, Any]] = field(default_factory=list)
    points: List[Dict[str, Any]] = field(default_factory=list)
    fit: Optional[FitResult] = None
    failures: int = 0


def _sort_point(cfg: ExperimentConfig, r: int, lo: int, results: List[TrialResult]) -> Dict[str, Any]:
    red_red = np.array([res.sheet.red_red for res in results], dtype=float)
    totals = np.array([res.sheet.total for res in results], dtype=float)
    build = np.array([res.sheet.get(Phase.BUILD, ColorClass.RED_RED) for res in results], dtype=float)
    premature = np.array([res.sheet.segments[Segment.PREMATURE] for res in results], dtype=float)
    mature = np.array([res.sheet.segments[Segment.MATURE] for res in results], dtype=float)
    low, high = heapsort_envelope(cfg.n)
    outside = int(np.sum((totals < low) | (totals > high)))
    return {
        "algo": cfg.algo,
        "n": cfg.n,
        "r": r,
        "lo": lo,
        "trials": len(results),
        "mean_red_red": float(red_red.mean()),
        "std_red_red": float(red_red.std()),
        "mean_total": float(totals.mean()),
        "mean_build_red_red": float(build.mean()),
        "max_build_red_red": int(build.max()),
        "mean_premature_red_red": float(premature.mean()),
        "mean_mature_red_red": float(mature.mean()),
        "bound_line": binomial_bound_line(r),
        "envelope_outside": outside,
    }


def run_experiment(cfg: ExperimentConfig, decimals: int = 6) -> ExperimentResult:
    """Sort `trials` shuffles per red length and tally every comparison."""
    result = ExperimentResult(config=cfg)
    rs = cfg.r_sweep or [cfg.r]
    for r in rs:
        lo = cfg.red_offset(r)
        tasks = [(cfg.algo, cfg.n, r, lo, seed) for seed in _seeds(cfg)]
        trials = _map(run_trial, tasks, cfg.jobs)
        for trial in trials:
            result.rows.extend(trial.sheet.rows(trial.seed, cfg.n, r, lo, cfg.algo))
            result.failures += not trial.sorted_ok
        point = _sort_point(cfg, r, lo, trials)
        result.points.append(point)
        logger.info(
            "experiment_point",
            algo=cfg.algo,
            n=cfg.n,
            r=r,
            trials=cfg.trials,
            mean_red_red=point["mean_red_red"],
            bound_line=point["bound_line"],
        )
        if point["envelope_outside"]:
            logger.warning("envelope_exceeded", algo=cfg.algo, n=cfg.n, r=r, runs=point["envelope_outside"])
    fit_points = [(p["r"], p["mean_red_red"]) for p in result.points if p["r"] > 1]
    if len({r for r, _ in fit_points}) >= 2:
        result.fit = fit_r_log_r([r for r, _ in fit_points], [m for _, m in fit_points])
        logger.info("fit", algo=cfg.algo, n=cfg.n, c_hat=result.fit.c_hat, b=result.fit.b, residual=result.fit.residual_norm)
    if result.failures:
        logger.error("sort_mismatch", algo=cfg.algo, n=cfg.n, failures=result.failures)
    if cfg.out:
        write_csv(result.rows, Path(cfg.out), TallySheet.CSV_COLUMNS, decimals)
        write_csv(result.points, summary_path(Path(cfg.out)), decimals=decimals)
    return result


# ---------------------------------------------------------------------------
# Build phase
# ---------------------------------------------------------------------------


def run_build_trial(task: tuple) -> int:
    """Red/red comparisons of the build phase alone."""
    algo, n, r, lo, seed = task
    keys = shuffle(keys_from_ranks(range(n)), seed)
    probe = ComparisonProbe(RedRange.for_instance(n, r, lo))
    if algo == "binomial":
        build_queue(keys, probe)
    elif algo == "modified":
        start = 0
        for size in almost_binary_expansion(n).block_sizes:
            build_heap(HeapArray.from_keys(keys[start : start + size]), probe)
            start += size
    else:
        build_heap(HeapArray.from_keys(keys), probe)
    return probe.sheet.get(Phase.BUILD, ColorClass.RED_RED)


@dataclass
class BuildPhaseReport:
    algo: str
    points: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def max_ratio(self) -> float:
        return max((p["mean_over_r"] for p in self.points), default=0.0)

    @property
    def bound_violations(self) -> int:
        """Runs whose build-phase red/red count exceeds r."""
        return sum(p["runs_above_r"] for p in self.points)


def _red_length(cfg: ExperimentConfig, n: int) -> int:
    if cfg.r_ratio is None:
        r = cfg.r
    else:
        r = max(1, int(round(n * cfg.r_ratio)))
    if r > n:
        raise ExperimentConfigError(f"r={r} exceeds n={n}", component="experiments", details={"n": n, "r": r})
    return r


def run_buildphase_experiment(cfg: ExperimentConfig, decimals: int = 6) -> BuildPhaseReport:
    if cfg.algo == "quicksort-strings":
        raise ExperimentConfigError("Quicksort has no build phase", component="experiments", details={"algo": cfg.algo})
    report = BuildPhaseReport(algo=cfg.algo)
    for n in cfg.n_sweep or [cfg.n]:
        r = _red_length(cfg, n)
        lo = n - r if cfg.lo is None or cfg.n_sweep else cfg.lo
        counts = np.array(_map(run_build_trial, [(cfg.algo, n, r, lo, s) for s in _seeds(cfg)], cfg.jobs), dtype=float)
        point = {
            "algo": cfg.algo,
            "n": n,
            "r": r,
            "trials": len(counts),
            "mean_red_red": float(counts.mean()),
            "max_red_red": int(counts.max()),
            "mean_over_r": float(counts.mean() / r) if r else 0.0,
            "runs_above_r": int(np.sum(counts > r)),
        }
        report.points.append(point)
        logger.info("build_phase_point", **point)
    logger.info("build_phase_summary", algo=cfg.algo, max_ratio=report.max_ratio, violations=report.bound_violations)
    if cfg.out:
        write_csv(report.points, Path(cfg.out), decimals=decimals)
    return report


# ---------------------------------------------------------------------------
# Root list occupancy
# ---------------------------------------------------------------------------


@dataclass
class RootListTrial:
    red_roots: np.ndarray  # per snapshot: after the build, then after each pop
    build_red_red: int
    first_pop_red_red: int
    total_red_red: int


def run_rootlist_trial(task: tuple) -> RootListTrial:
    n, r, seed = task
    red = RedRange.top(n, r)
    keys = shuffle(keys_from_ranks(range(n)), seed)
    probe = ComparisonProbe(red)
    counts = np.zeros(n + 1, dtype=np.int32)
    red_red_at: List[int] = []

    def observe(q) -> None:
        counts[len(red_red_at)] = red_roots(q, red)
        red_red_at.append(probe.sheet.red_red)

    binomial_heapsort(keys, probe, observer=observe)
    first_pop = red_red_at[1] - red_red_at[0] if n else 0
    return RootListTrial(
        red_roots=counts,
        build_red_red=probe.sheet.get(Phase.BUILD, ColorClass.RED_RED),
        first_pop_red_red=first_pop,
        total_red_red=probe.sheet.red_red,
    )


@dataclass
class RootListPoint:
    n: int
    r: int
    trials: int
    mean: float
    std: float
    expected: float
    drift: Optional[float]
    histogram: Dict[int, int]
    snapshot_deviation: float
    first_pop_mean: float
    popmax_bound: Optional[float]
    total_mean: float
    bound_line: float
    build_max: int

    @property
    def stderr(self) -> float:
        return self.std / math.sqrt(self.trials) if self.trials else 0.0

    @property
    def within_three_sigma(self) -> bool:
        if self.stderr == 0:
            return math.isclose(self.mean, self.expected, abs_tol=1e-9)
        return abs(self.mean - self.expected) <= 3 * self.stderr

    @property
    def within_drift(self) -> bool:
        return self.drift is None or self.mean <= self.drift

    @property
    def build_bound_holds(self) -> bool:
        return self.build_max <= self.r

    def to_row(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "r": self.r,
            "trials": self.trials,
            "mean_red_roots": self.mean,
            "std_red_roots": self.std,
            "expected_red_roots": self.expected,
            "log2_r": math.log2(self.r) if self.r else 0.0,
            "drift_bound": self.drift if self.drift is not None else 0.0,
            "within_three_sigma": self.within_three_sigma,
            "snapshot_deviation": self.snapshot_deviation,
            "first_pop_red_red": self.first_pop_mean,
            "popmax_bound": self.popmax_bound if self.popmax_bound is not None else 0.0,
            "total_red_red": self.total_mean,
            "bound_line": self.bound_line,
            "max_build_red_red": self.build_max,
        }


def _expected_by_snapshot(n: int, r: int) -> np.ndarray:
    """Expected red roots after k pops: R(n - k, r - k), reds popped first."""
    return np.array([float(root_red_expectation(n - k, max(r - k, 0))) for k in range(n + 1)])


def run_rootlist_experiment(cfg: ExperimentConfig, decimals: int = 6) -> List[RootListPoint]:
    rs = cfg.r_sweep or [cfg.r]
    if cfg.lo is not None and any(cfg.lo != cfg.n - r for r in rs):
        raise ExperimentConfigError(
            "Root-list occupancy is defined for the top red range only",
            component="experiments",
            details={"lo": cfg.lo},
        )
    points = []
    for r in rs:
        trials: List[RootListTrial] = _map(run_rootlist_trial, [(cfg.n, r, s) for s in _seeds(cfg)], cfg.jobs)
        matrix = np.stack([t.red_roots for t in trials])
        post_build = matrix[:, 0].astype(float)
        deviation = float((matrix - _expected_by_snapshot(cfg.n, r)[None, :]).mean())
        point = RootListPoint(
            n=cfg.n,
            r=r,
            trials=len(trials),
            mean=float(post_build.mean()),
            std=float(post_build.std(ddof=1)) if len(trials) > 1 else 0.0,
            expected=float(root_red_expectation(cfg.n, r)),
            drift=drift_bound(r) if r >= 1 else None,
            histogram=dict(sorted(Counter(int(v) for v in matrix[:, 0]).items())),
            snapshot_deviation=deviation,
            first_pop_mean=float(np.mean([t.first_pop_red_red for t in trials])),
            popmax_bound=float(popmax_bound(cfg.n, r)) if r >= 1 else None,
            total_mean=float(np.mean([t.total_red_red for t in trials])),
            bound_line=binomial_bound_line(r),
            build_max=max(t.build_red_red for t in trials),
        )
        points.append(point)
        logger.info(
            "root_list_point",
            n=cfg.n,
            r=r,
            mean=point.mean,
            expected=point.expected,
            drift=point.drift,
            within_three_sigma=point.within_three_sigma,
        )
    if cfg.out:
        write_csv([p.to_row() for p in points], Path(cfg.out), decimals=decimals)
    return points


# ---------------------------------------------------------------------------
# Adversarial heaps
# ---------------------------------------------------------------------------


@dataclass
class AdversarialReport:
    points: List[Dict[str, Any]]
    exponent: float
    quadratic_coefficient: float

    @property
    def matches_closed_form(self) -> bool:
        return all(p["red_red"] == p["expected_red_red"] for p in self.points)


def run_adversarial_experiment(k_values: Iterable[int], out: Optional[str] = None, decimals: int = 6) -> AdversarialReport:
    """Floyd sort phase on the degenerate heaps; fits red/red against r."""
    points = []
    for k in k_values:
        heap = construct_adversarial_heap(k)
        n, r = adversarial_size(k)
        probe = ComparisonProbe(adversarial_red_range(k))
        floyd_sort_phase(heap, probe)
        count = probe.sheet.get(Phase.SORT, ColorClass.RED_RED)
        points.append(
            {
                "k": k,
                "n": n,
                "r": r,
                "red_red": count,
                "expected_red_red": adversarial_red_red(k),
                "per_r_squared": count / (r * r),
            }
        )
    usable = [p for p in points if p["red_red"] > 0]
    if len(usable) < 2:
        raise ExperimentConfigError("Need two exponents with red/red comparisons", component="experiments")
    exponent, _ = fit_power_law([p["r"] for p in usable], [p["red_red"] for p in usable])
    quadratic = fit_quadratic([p["r"] for p in usable], [p["red_red"] for p in usable])
    report = AdversarialReport(points, exponent, quadratic)
    logger.info(
        "adversarial_fit",
        exponent=exponent,
        quadratic_coefficient=quadratic,
        points=len(points),
        closed_form=report.matches_closed_form,
    )
    if out:
        write_csv(points, Path(out), decimals=decimals)
    return report


# ---------------------------------------------------------------------------
# Trie prediction against measurement
# ---------------------------------------------------------------------------


@dataclass
class TriePredictionReport:
    size: int
    nodes: int
    reduced_nodes: int
    prediction: float
    measured_mean: float
    measured_std: float
    trials: int

    @property
    def relative_error(self) -> float:
        if self.prediction == 0:
            return abs(self.measured_mean)
        return abs(self.measured_mean - self.prediction) / self.prediction

    def to_row(self) -> Dict[str, Any]:
        return {
            "size": self.size,
            "nodes": self.nodes,
            "reduced_nodes": self.reduced_nodes,
            "trials": self.trials,
            "prediction": self.prediction,
            "measured_mean": self.measured_mean,
            "measured_std": self.measured_std,
            "relative_error": self.relative_error,
        }


def predict_and_measure(
    keys: Sequence[StringKey],
    trials: int,
    seed: int,
    cost: str = "Q",
    out: Optional[str] = None,
    decimals: int = 6,
) -> TriePredictionReport:
    trie = build_trie(keys)
    prediction = float(predict_cost(trie, resolve_cost(cost)))
    sample = measure_symbol_cost(keys, trials, seed)
    report = TriePredictionReport(
        size=trie.size,
        nodes=len(trie),
        reduced_nodes=len(reduced_trie(trie)),
        prediction=prediction,
        measured_mean=sample.mean,
        measured_std=sample.std,
        trials=trials,
    )
    logger.info(
        "trie_prediction",
        size=report.size,
        prediction=report.prediction,
        measured=report.measured_mean,
        relative_error=report.relative_error,
    )
    if out:
        write_csv([report.to_row()], Path(out), decimals=decimals)
        write_csv(trie.histogram().to_dict("records"), summary_path(Path(out)), decimals=decimals)
    return report
