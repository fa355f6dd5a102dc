"""
File: linemix/em/init.py

Project: linemix

Purpose:
Deterministic starting point for EM ("peel-off" initialization).

For l = 1..L:
1. ordinary least squares on the current working set -> (a_l, b_l)
2. sigma2_l = mean squared residual of that working set (floored)
3. deviations d(n) = |y - a x - b| / sqrt(a^2 + b^2)
4. drop the floor(N / L) points with the smallest deviation
The last component uses whatever remains. Weights start uniform.
"""

from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from linemix.core.types import ComponentParams, Dataset, MixtureModel
from linemix.em.config import EmConfig
from linemix.errors import InitializationError

logger = logging.getLogger("em_init")


def ols_line(x: np.ndarray, y: np.ndarray) -> tuple[float, float]:
    x_bar = float(np.mean(x))
    y_bar = float(np.mean(y))
    dx = x - x_bar
    sxx = float(np.dot(dx, dx))
    if sxx <= 0.0:
        raise ValueError("all x values are identical")
    a = float(np.dot(dx, y - y_bar)) / sxx
    return a, y_bar - a * x_bar


def initialize(d: Dataset, n_components: int, cfg: Optional[EmConfig] = None) -> MixtureModel:
    cfg = cfg or EmConfig()
    if n_components < 1:
        raise InitializationError(1, f"number of components must be >= 1, got {n_components}")
    if d.n < 2 * n_components:
        raise InitializationError(
            n_components,
            f"need at least {2 * n_components} measurements for {n_components} components, have {d.n}",
        )

    floor = cfg.floor_for(float(np.var(d.y)))
    prune = d.n // n_components
    x, y = d.x, d.y
    components: list[ComponentParams] = []

    for l in range(1, n_components + 1):
        if x.size < 2:
            raise InitializationError(l, f"only {x.size} measurements left in the working set")
        try:
            a, b = ols_line(x, y)
        except ValueError as exc:
            raise InitializationError(l, str(exc)) from None

        resid = y - a * x - b
        sigma2 = max(float(np.mean(resid * resid)), floor)
        components.append(ComponentParams(a=a, b=b, sigma2=sigma2))
        logger.debug("init component %d: a=%.6g b=%.6g sigma2=%.6g from %d points", l, a, b, sigma2, x.size)

        if l == n_components:
            break

        norm = np.hypot(a, b)
        dev = np.abs(resid) / norm if norm > 0.0 else np.abs(resid)
        # stable sort keeps the lowest index first among equal deviations
        keep = np.sort(np.argsort(dev, kind="stable")[prune:])
        x, y = x[keep], y[keep]

    return MixtureModel(components=tuple(components), weights=np.full(n_components, 1.0 / n_components))
