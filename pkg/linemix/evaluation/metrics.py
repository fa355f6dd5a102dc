"""
File: linemix/evaluation/metrics.py

Project: linemix

Purpose:
Benchmark metrics.
- consistency: % of points assigned to their own target after matching
- per_target_error: % of each target's points assigned elsewhere
- prmse: percentage RMS error of (a, b) over Monte-Carlo trials, with the
  nearest fitted line taken per trial, per parameter
- rmse_count: RMS error of the estimated number of targets

Rules:
- Predicted clusters left unmatched count all their points as errors
- Trials are folded in index order so results are reproducible bit for bit
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from linemix.evaluation.labels import Labeling, match_labels
from linemix.errors import DatasetError


@dataclass(frozen=True)
class MetricsReport:
    consistency_percent: float
    per_target_error_percent: tuple[float, ...]
    prmse_a: Optional[tuple[float, ...]] = None
    prmse_b: Optional[tuple[float, ...]] = None
    rmse_L: Optional[float] = None

    def __post_init__(self) -> None:
        if not 0.0 <= self.consistency_percent <= 100.0:
            raise ValueError(f"consistency out of range: {self.consistency_percent}")
        if any(not 0.0 <= e <= 100.0 for e in self.per_target_error_percent):
            raise ValueError("per-target error out of range")
        if self.rmse_L is not None and self.rmse_L < 0.0:
            raise ValueError("rmse_L must be >= 0")


@dataclass(frozen=True)
class PrmseResult:
    """
    Percent errors per true target. Where the true parameter is exactly
    zero the value is an absolute RMSE and the matching flag is set.
    """

    prmse_a: tuple[float, ...]
    prmse_b: tuple[float, ...]
    absolute_a: tuple[bool, ...]
    absolute_b: tuple[bool, ...]


def consistency(pred: Labeling, truth: Labeling) -> float:
    match = match_labels(pred, truth)
    return 100.0 * match.agreements / truth.n


def per_target_error(pred: Labeling, truth: Labeling, n_targets: Optional[int] = None) -> tuple[float, ...]:
    """
    Targets with no points in this labeling (possible when n_targets is
    forced) report 0.
    """
    match = match_labels(pred, truth, n_targets=n_targets)
    k_t = max(truth.n_clusters, n_targets or 0)
    mapped = np.array([match.mapping[int(l)] or 0 for l in pred.labels])
    errors = []
    for t in range(1, k_t + 1):
        members = truth.labels == t
        n_t = int(members.sum())
        if n_t == 0:
            errors.append(0.0)
            continue
        wrong = int(np.sum(mapped[members] != t))
        errors.append(100.0 * wrong / n_t)
    return tuple(errors)


def _prmse_column(truth: np.ndarray, estimates: Sequence[np.ndarray]) -> tuple[list[float], list[bool]]:
    sq_sum = np.zeros(truth.size)
    for est in estimates:
        est = np.asarray(est, dtype=np.float64).ravel()
        if est.size == 0:
            raise DatasetError("every trial must provide at least one fitted component")
        sq_sum += np.min((truth[:, None] - est[None, :]) ** 2, axis=1)
    rmse = np.sqrt(sq_sum / len(estimates))

    values, absolute = [], []
    for true_value, err in zip(truth, rmse):
        if true_value == 0.0:
            values.append(float(err))
            absolute.append(True)
        else:
            values.append(float(err * 100.0 / abs(true_value)))
            absolute.append(False)
    return values, absolute


def prmse(
    true_params: Sequence[tuple[float, float]],
    estimates: Sequence[Sequence[tuple[float, float]]],
) -> PrmseResult:
    """
    true_params: (a_l, b_l) per true target
    estimates: per trial, the fitted (a, b) of every component
    """
    if not estimates:
        raise DatasetError("prmse needs at least one trial")
    truth = np.asarray(true_params, dtype=np.float64).reshape(-1, 2)
    trials = [np.asarray(t, dtype=np.float64).reshape(-1, 2) for t in estimates]
    pa, abs_a = _prmse_column(truth[:, 0], [t[:, 0] for t in trials])
    pb, abs_b = _prmse_column(truth[:, 1], [t[:, 1] for t in trials])
    return PrmseResult(tuple(pa), tuple(pb), tuple(abs_a), tuple(abs_b))


def rmse_count(estimates: Sequence[int], true_L: int) -> float:
    if not estimates:
        raise DatasetError("rmse_count needs at least one trial")
    total = 0.0
    for est in estimates:
        total += float(est - true_L) ** 2
    return math.sqrt(total / len(estimates))
