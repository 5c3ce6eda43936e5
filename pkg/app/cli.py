"""
bench_cli: command-line surface of the lab.

Exit codes: 0 when every configured assertion passes, 1 when one fails,
2 on a ComponentError (invalid configuration, unreadable input, I/O failure).
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from app.components.base.config import get_settings
from app.components.base.exceptions import ComponentError, ExperimentConfigError
from app.components.base.logging import configure_logging, get_logger
from app.components.combinatorics.service import CombinatoricsService
from app.components.experiments.models import build_config
from app.components.experiments.output import write_csv
from app.components.experiments.presets import get_preset
from app.components.experiments.runner import (
    predict_and_measure,
    run_adversarial_experiment,
    run_buildphase_experiment,
    run_experiment,
    run_rootlist_experiment,
)
from app.components.trie_model.corpus import load_corpus
from app.components.uniformity_lab.models import VerifyRequest
from app.components.uniformity_lab.service import UniformityLabService

logger = get_logger("cli")

Assertion = Tuple[str, bool]

# Fallbacks for flags neither given nor set by a preset.
FLAG_DEFAULTS: Dict[str, Any] = {
    "algo": "modified",
    "n": None,
    "r": 0,
    "lo": None,
    "out": None,
    "r_sweep": [],
    "n_sweep": [],
    "r_ratio": None,
    "expect_c": None,
    "max_ratio": None,
    "k_min": 4,
    "k_max": 10,
    "min_exponent": None,
    "cost": "Q",
    "max_error": None,
    "max": 16,
}


def _int_list(text: str) -> List[int]:
    return [int(part) for part in text.split(",") if part.strip()]


def _float_pair(text: str) -> List[float]:
    lo, hi = (float(part) for part in text.split(","))
    return [lo, hi]


def _add_run_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--algo", choices=["classic", "floyd", "modified", "binomial", "quicksort-strings"])
    parser.add_argument("--n", type=int)
    parser.add_argument("--r", type=int)
    parser.add_argument("--lo", type=int)
    parser.add_argument("--r-sweep", dest="r_sweep", type=_int_list, help="comma-separated red lengths")
    _add_common_flags(parser)


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--trials", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--out")
    parser.add_argument("--jobs", type=int)
    parser.add_argument("--preset")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bench_cli", description="Comparison complexity lab")
    sub = parser.add_subparsers(dest="command", required=True)

    experiment = sub.add_parser("experiment", help="sort shuffles and tally red/red comparisons")
    _add_run_flags(experiment)
    experiment.add_argument("--expect-c", dest="expect_c", type=_float_pair, help="LO,HI band for the fitted constant")

    build = sub.add_parser("build-phase", help="build-phase red/red comparisons")
    _add_run_flags(build)
    build.add_argument("--n-sweep", dest="n_sweep", type=_int_list)
    build.add_argument("--r-ratio", dest="r_ratio", type=float)
    build.add_argument("--max-ratio", dest="max_ratio", type=float)

    roots = sub.add_parser("root-list", help="red roots of binomial queues")
    roots.add_argument("--n", type=int)
    roots.add_argument("--r", type=int)
    roots.add_argument("--r-sweep", dest="r_sweep", type=_int_list)
    _add_common_flags(roots)

    adversarial = sub.add_parser("adversarial", help="Floyd pops on degenerate heaps")
    adversarial.add_argument("--k-min", dest="k_min", type=int)
    adversarial.add_argument("--k-max", dest="k_max", type=int)
    adversarial.add_argument("--min-exponent", dest="min_exponent", type=float)
    adversarial.add_argument("--out")
    adversarial.add_argument("--preset")

    trie = sub.add_parser("predict-trie", help="trie prediction against measured Quicksort")
    trie.add_argument("--corpus", required=True)
    trie.add_argument("--cost", help="Q, R, or a CSV file with columns n,cost")
    trie.add_argument("--max-error", dest="max_error", type=float)
    _add_common_flags(trie)

    verify = sub.add_parser("verify", help="run a named verification check")
    verify.add_argument("check")
    verify.add_argument("--n", type=int, required=True)
    _add_common_flags(verify)

    table = sub.add_parser("table", help="emit a named table")
    table.add_argument("name")
    table.add_argument("--max", type=int)
    table.add_argument("--out")

    return parser


def resolve(args: argparse.Namespace) -> argparse.Namespace:
    """Explicit flags win over the preset; the preset wins over defaults."""
    settings = get_settings()
    preset: Dict[str, Any] = get_preset(args.preset, settings.presets_path) if getattr(args, "preset", None) else {}
    for key, value in preset.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)
    defaults = {**FLAG_DEFAULTS, "trials": settings.default_trials, "seed": settings.seed, "jobs": settings.jobs}
    for key, value in defaults.items():
        if hasattr(args, key) and getattr(args, key) is None:
            setattr(args, key, value)
    if hasattr(args, "n") and args.n is None:
        raise ExperimentConfigError("--n is required (flag or preset)", component="cli")
    return args


def _config(args: argparse.Namespace, algo: Optional[str] = None):
    return build_config(
        algo=algo or args.algo,
        n=args.n,
        r=args.r,
        lo=getattr(args, "lo", None),
        trials=args.trials,
        seed=args.seed,
        out=args.out,
        jobs=args.jobs,
        r_sweep=args.r_sweep or [],
        n_sweep=getattr(args, "n_sweep", None) or [],
        r_ratio=getattr(args, "r_ratio", None),
    )


def _print_rows(rows: Sequence[Dict[str, Any]], decimals: int) -> None:
    if rows:
        pd.DataFrame(list(rows)).to_csv(sys.stdout, index=False, float_format=f"%.{decimals}f", lineterminator="\n")


def cmd_experiment(args: argparse.Namespace, decimals: int) -> List[Assertion]:
    cfg = _config(args)
    result = run_experiment(cfg, decimals)
    _print_rows(result.points, decimals)
    checks: List[Assertion] = [("sorted", result.failures == 0)]
    if result.fit is not None:
        print(f"fit c_hat={result.fit.c_hat:.{decimals}f} b={result.fit.b:.{decimals}f} residual={result.fit.residual_norm:.{decimals}f}")
        if args.expect_c:
            lo, hi = args.expect_c
            checks.append(("c_hat_band", lo <= result.fit.c_hat <= hi))
    if cfg.algo == "binomial":
        checks.append(("build_at_most_r", all(p["max_build_red_red"] <= p["r"] for p in result.points)))
        checks.append(("bound_line", all(p["mean_red_red"] <= p["bound_line"] for p in result.points if p["r"] >= 1)))
    return checks


def cmd_build_phase(args: argparse.Namespace, decimals: int) -> List[Assertion]:
    report = run_buildphase_experiment(_config(args), decimals)
    _print_rows(report.points, decimals)
    print(f"max mean/r={report.max_ratio:.{decimals}f}")
    checks: List[Assertion] = []
    if args.max_ratio is not None:
        checks.append(("mean_over_r", report.max_ratio <= args.max_ratio))
    if args.algo == "binomial":
        checks.append(("build_at_most_r", report.bound_violations == 0))
    return checks


def cmd_root_list(args: argparse.Namespace, decimals: int) -> List[Assertion]:
    points = run_rootlist_experiment(_config(args, algo="binomial"), decimals)
    _print_rows([p.to_row() for p in points], decimals)
    for p in points:
        print(f"r={p.r} histogram={json.dumps(p.histogram)}")
    return [
        ("three_sigma", all(p.within_three_sigma for p in points)),
        ("drift_bound", all(p.within_drift for p in points)),
        ("build_at_most_r", all(p.build_bound_holds for p in points)),
    ]


def cmd_adversarial(args: argparse.Namespace, decimals: int) -> List[Assertion]:
    report = run_adversarial_experiment(range(args.k_min, args.k_max + 1), args.out, decimals)
    _print_rows(report.points, decimals)
    print(f"exponent={report.exponent:.{decimals}f} quadratic={report.quadratic_coefficient:.{decimals}f}")
    assertions = [("closed_form", report.matches_closed_form)]
    if args.min_exponent is not None:
        assertions.append(("exponent", report.exponent >= args.min_exponent))
    return assertions


def cmd_predict_trie(args: argparse.Namespace, decimals: int) -> List[Assertion]:
    keys = load_corpus(Path(args.corpus))
    report = predict_and_measure(keys, args.trials, args.seed, args.cost, args.out, decimals)
    _print_rows([report.to_row()], decimals)
    if args.max_error is None:
        return []
    return [("relative_error", report.relative_error <= args.max_error)]


def cmd_verify(args: argparse.Namespace, decimals: int) -> List[Assertion]:
    response = UniformityLabService().run(
        VerifyRequest(check=args.check, n=args.n, trials=args.trials, seed=args.seed)
    )
    print(f"{'PASS' if response.passed else 'FAIL'} {response.check} n={response.n} {json.dumps(response.summary, default=str)}")
    if args.out and response.rows:
        write_csv(response.rows, Path(args.out), decimals=decimals)
    return [(response.check, response.passed)]


def cmd_table(args: argparse.Namespace, decimals: int) -> List[Assertion]:
    table = CombinatoricsService().build(args.name, args.max)
    rows = table.rows(decimals)
    if args.out:
        write_csv(rows, Path(args.out), columns=["table", "index", "value"], decimals=decimals)
    else:
        _print_rows(rows, decimals)
    return []


COMMANDS: Dict[str, Callable[[argparse.Namespace, int], List[Assertion]]] = {
    "experiment": cmd_experiment,
    "build-phase": cmd_build_phase,
    "root-list": cmd_root_list,
    "adversarial": cmd_adversarial,
    "predict-trie": cmd_predict_trie,
    "verify": cmd_verify,
    "table": cmd_table,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    settings = get_settings()
    configure_logging(settings.environment)
    args = build_parser().parse_args(argv)
    try:
        args = resolve(args)
        checks = COMMANDS[args.command](args, settings.csv_decimals)
    except ComponentError as e:
        logger.error("command_failed", command=args.command, error=e.message)
        print(json.dumps(e.to_dict(), default=str), file=sys.stderr)
        return 2
    failed = [name for name, passed in checks if not passed]
    for name, passed in checks:
        print(f"assert {name}: {'pass' if passed else 'fail'}")
    logger.info("command_completed", command=args.command, assertions=len(checks), failed=failed)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
