"""Least-squares fits for comparison counts."""

from typing import Sequence, Tuple

import numpy as np

from .models import FitResult


def fit_r_log_r(rs: Sequence[int], means: Sequence[float]) -> FitResult:
    """Solve min ||A [c, b] - means|| with A = [r log2 r, r]."""
    r = np.asarray(rs, dtype=float)
    y = np.asarray(means, dtype=float)
    design = np.column_stack([r * np.log2(np.maximum(r, 1.0)), r])
    coef, *_ = np.linalg.lstsq(design, y, rcond=None)
    residual = float(np.linalg.norm(design @ coef - y))
    return FitResult(rs=list(rs), means=list(means), c_hat=float(coef[0]), b=float(coef[1]), residual_norm=residual)


def fit_power_law(xs: Sequence[float], ys: Sequence[float]) -> Tuple[float, float]:
    """Slope and intercept of log y against log x."""
    slope, intercept = np.polyfit(np.log(np.asarray(xs, dtype=float)), np.log(np.asarray(ys, dtype=float)), 1)
    return float(slope), float(intercept)


def fit_quadratic(xs: Sequence[float], ys: Sequence[float]) -> float:
    """c in y ~ c x^2."""
    x2 = np.asarray(xs, dtype=float) ** 2
    coef, *_ = np.linalg.lstsq(x2[:, None], np.asarray(ys, dtype=float), rcond=None)
    return float(coef[0])
