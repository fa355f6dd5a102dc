"""
File: linemix/em/steps.py

Project: linemix

Purpose:
E-step and closed-form M-step of the line-mixture EM.
- e_step: posteriors via row-wise log-sum-exp normalisation
- m_step_weights: column means of the posteriors
- m_step_component: weighted least squares for (a, b), then the weighted
  mean squared residual for sigma2

The M-step solves the 2x2 weighted normal equations directly. The
sequential "intercept first, then slope" closed forms give the same
stationary point and are kept in the tests as an oracle.
"""

from __future__ import annotations

from typing import Optional

import numpy as np
from scipy.special import logsumexp

from linemix.core.density import joint_log_densities
from linemix.core.types import ComponentParams, Dataset, MixtureModel, Responsibilities
from linemix.em.config import EmConfig
from linemix.errors import EmptyComponentError

# relative threshold on the weighted x variance below which the normal
# equations are considered singular
_SPREAD_TOL = 1e-12


def e_step(d: Dataset, mm: MixtureModel) -> Responsibilities:
    joint = joint_log_densities(d, mm)
    log_post = joint - logsumexp(joint, axis=1, keepdims=True)
    post = np.exp(log_post)
    # re-normalise away the last ulp so rows sum to one to machine precision
    post /= post.sum(axis=1, keepdims=True)
    return Responsibilities(post)


def m_step_weights(r: Responsibilities) -> np.ndarray:
    w = r.matrix.mean(axis=0)
    return w / w.sum()


def weighted_line(x: np.ndarray, y: np.ndarray, w: np.ndarray, component: int = 1) -> tuple[float, float]:
    """Minimise sum_n w_n (y_n - a x_n - b)^2 through the normal equations."""
    s0 = float(w.sum())
    x_bar = float(np.dot(w, x)) / s0
    # regressors (x - x_bar, 1): same solution, far better conditioned than (x, 1)
    dx = x - x_bar
    sxx = float(np.dot(w, dx * dx))
    scale = float(np.dot(w, x * x)) / s0
    if sxx <= _SPREAD_TOL * max(scale, 1.0) * s0:
        raise EmptyComponentError(component, "no weighted spread in x")
    sx = float(np.dot(w, dx))
    normal = np.array([[sxx, sx], [sx, s0]])
    rhs = np.array([float(np.dot(w, dx * y)), float(np.dot(w, y))])
    slope, level = np.linalg.solve(normal, rhs)
    return float(slope), float(level - slope * x_bar)


def m_step_component(
    d: Dataset,
    r_col: np.ndarray,
    *,
    floor: Optional[float] = None,
    min_mass: Optional[float] = None,
    component: int = 1,
) -> ComponentParams:
    if floor is None:
        floor = d.variance_floor()
    if min_mass is None:
        min_mass = EmConfig().empty_component_fraction * d.n
    mass = float(np.sum(r_col))
    if mass < min_mass or mass <= 0.0:
        raise EmptyComponentError(component, f"responsibility mass {mass:.3e} below {min_mass:.3e}")

    a, b = weighted_line(d.x, d.y, r_col, component)
    resid = d.y - a * d.x - b
    sigma2 = float(np.dot(r_col, resid * resid)) / mass
    return ComponentParams(a=a, b=b, sigma2=max(sigma2, floor))

