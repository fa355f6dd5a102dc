"""
File: linemix/selection/order.py

Project: linemix

Purpose:
Estimate the number of targets.
- fit EM for every L in 1..L_max, each from its own fresh initialization
- score -2 loglik + p(L), pick the minimum (ties -> smaller L)
- an L whose fit cannot start or aborts scores +inf and is kept in the table
- so does an L > 1 fit with a collapsed component (too few effective points,
  or a variance far below the widest component)

Per-L fits are independent; with workers > 1 they run on a thread pool and
are merged back by L.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from linemix.core.types import Dataset
from linemix.em.config import EmConfig
from linemix.em.fit import FitResult, fit_em
from linemix.errors import FitAbortedError, InitializationError, OrderSelectionError
from linemix.selection.criteria import Criterion, score

logger = logging.getLogger("order_selection")


@dataclass(frozen=True)
class OrderScore:
    n_components: int
    score: float
    loglik: float
    iterations: int
    feasible: bool
    reason: Optional[str] = None


@dataclass(frozen=True)
class OrderSelectionResult:
    chosen_L: int
    criterion: Criterion
    scores: tuple[OrderScore, ...]
    fits: dict[int, FitResult] = field(repr=False)

    @property
    def chosen_fit(self) -> FitResult:
        return self.fits[self.chosen_L]


def degenerate_component(result: FitResult, cfg: EmConfig) -> Optional[str]:
    """Describe the first collapsed component of a multi-component fit, if any."""
    if result.model.n_components < 2:
        return None
    support = result.responsibilities.matrix.sum(axis=0)
    sigma2 = np.array([c.sigma2 for c in result.model.components])
    widest = float(sigma2.max())
    for l in range(result.model.n_components):
        if support[l] < cfg.min_component_support:
            return f"component {l + 1} holds {support[l]:.2f} effective points (< {cfg.min_component_support:g})"
        if sigma2[l] < cfg.min_variance_ratio * widest:
            return (
                f"component {l + 1} variance {sigma2[l]:.3e} is below "
                f"{cfg.min_variance_ratio:g} x the widest ({widest:.3e})"
            )
    return None


def _fit_one(d: Dataset, n_components: int, cfg: EmConfig) -> tuple[Optional[FitResult], Optional[str]]:
    try:
        result = fit_em(d, n_components, cfg.for_order(n_components))
    except (InitializationError, FitAbortedError) as exc:
        logger.debug("L=%d infeasible: %s", n_components, exc)
        return None, str(exc)
    reason = degenerate_component(result, cfg)
    if reason is not None:
        logger.debug("L=%d rejected: %s", n_components, reason)
        return None, f"degenerate fit: {reason}"
    return result, None


def fit_orders(
    d: Dataset,
    l_max: int,
    cfg: Optional[EmConfig] = None,
    *,
    workers: int = 1,
) -> dict[int, tuple[Optional[FitResult], Optional[str]]]:
    """Fit every L in 1..l_max. Reusable across criteria."""
    if l_max < 1:
        raise OrderSelectionError(f"L_max must be >= 1, got {l_max}")
    cfg = cfg or EmConfig()
    orders = range(1, l_max + 1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda L: _fit_one(d, L, cfg), orders))
    else:
        outcomes = [_fit_one(d, L, cfg) for L in orders]
    return dict(zip(orders, outcomes))


def score_orders(
    d: Dataset,
    fits: dict[int, tuple[Optional[FitResult], Optional[str]]],
    c: Criterion,
) -> OrderSelectionResult:
    scores: list[OrderScore] = []
    kept: dict[int, FitResult] = {}
    for L in sorted(fits):
        result, reason = fits[L]
        if result is None:
            scores.append(OrderScore(L, math.inf, -math.inf, 0, False, reason))
            continue
        ll = result.report.final_loglik
        scores.append(OrderScore(L, score(ll, L, d.n, c), ll, result.report.iterations_used, True))
        kept[L] = result

    if not kept:
        raise OrderSelectionError(f"no feasible number of targets in 1..{len(scores)} for N={d.n}")

    # strict < keeps the smaller L on ties
    best = None
    for s in scores:
        if s.feasible and (best is None or s.score < best.score):
            best = s
    assert best is not None
    assert all(best.score <= s.score for s in scores)

    logger.info("%s selected L=%d (score %.6g)", c.name.upper(), best.n_components, best.score)
    return OrderSelectionResult(chosen_L=best.n_components, criterion=c, scores=tuple(scores), fits=kept)


def select_order(
    d: Dataset,
    l_max: int,
    c: Criterion,
    cfg: Optional[EmConfig] = None,
    *,
    workers: int = 1,
) -> OrderSelectionResult:
    return score_orders(d, fit_orders(d, l_max, cfg, workers=workers), c)
