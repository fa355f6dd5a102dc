"""
File: linemix/core/density.py

Project: linemix

Purpose:
Gaussian linear-regression densities and the mixture log-likelihood.
Everything is evaluated in the log domain; the mixture sum goes through
scipy's logsumexp so distant points never underflow.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import logsumexp

from linemix.core.types import ComponentParams, Dataset, Measurement, MixtureModel

_LOG_2PI = math.log(2.0 * math.pi)


def log_component_density(m: Measurement, c: ComponentParams) -> float:
    resid = m.y - c.a * m.x - c.b
    return -0.5 * (_LOG_2PI + math.log(c.sigma2)) - resid * resid / (2.0 * c.sigma2)


def log_component_densities(d: Dataset, mm: MixtureModel) -> np.ndarray:
    """N x L matrix of log f(y_n | c_n = l)."""
    a = mm.slopes[None, :]
    b = mm.intercepts[None, :]
    s2 = mm.variances[None, :]
    resid = d.y[:, None] - a * d.x[:, None] - b
    return -0.5 * (_LOG_2PI + np.log(s2)) - resid * resid / (2.0 * s2)


def log_weights(mm: MixtureModel) -> np.ndarray:
    # log(0) -> -inf so zero-weight components drop out of every sum
    with np.errstate(divide="ignore"):
        return np.log(mm.weights)


def joint_log_densities(d: Dataset, mm: MixtureModel) -> np.ndarray:
    """N x L matrix of log(pi_l) + log f(y_n | c_n = l)."""
    return log_component_densities(d, mm) + log_weights(mm)[None, :]


def log_likelihood(d: Dataset, mm: MixtureModel) -> float:
    return float(np.sum(logsumexp(joint_log_densities(d, mm), axis=1)))
