"""
File: linemix/em/config.py

Project: linemix

Purpose:
EM settings and the per-fit report.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from linemix.errors import ConfigError

DEFAULT_EPSILON = 1e-5
BUDGET_SMALL_L = 150
BUDGET_LARGE_L = 250
SMALL_L_LIMIT = 5


def iteration_budget(n_components: int) -> int:
    return BUDGET_SMALL_L if n_components <= SMALL_L_LIMIT else BUDGET_LARGE_L


@dataclass(frozen=True)
class EmConfig:
    """
    epsilon: relative log-likelihood tolerance for the stopping rule
    max_iterations: None means "use the L-dependent budget" (150 / 250)
    empty_component_fraction: a component whose responsibility mass is
        below fraction * N is treated as empty
    variance_floor_rel / variance_floor_abs: sigma2 >= max(rel * var(y), abs)
    min_component_support: order selection rejects an L > 1 fit with a
        component holding fewer effective points than this
    min_variance_ratio: order selection rejects an L > 1 fit whose smallest
        sigma2 is below this fraction of its largest
    """

    epsilon: float = DEFAULT_EPSILON
    max_iterations: Optional[int] = None
    empty_component_fraction: float = 1e-6
    variance_floor_rel: float = 1e-9
    variance_floor_abs: float = 1e-12
    min_component_support: float = 5.0
    min_variance_ratio: float = 1e-2

    def __post_init__(self) -> None:
        if not self.epsilon > 0.0:
            raise ConfigError(f"epsilon must be > 0, got {self.epsilon}")
        if self.max_iterations is not None and self.max_iterations < 1:
            raise ConfigError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if self.empty_component_fraction < 0.0:
            raise ConfigError("empty_component_fraction must be >= 0")
        if self.variance_floor_abs <= 0.0 or self.variance_floor_rel < 0.0:
            raise ConfigError("variance floor must be positive")
        if self.min_component_support < 0.0:
            raise ConfigError("min_component_support must be >= 0")
        if not 0.0 <= self.min_variance_ratio < 1.0:
            raise ConfigError(f"min_variance_ratio must be in [0, 1), got {self.min_variance_ratio}")

    def budget_for(self, n_components: int) -> int:
        if self.max_iterations is not None:
            return self.max_iterations
        return iteration_budget(n_components)

    def for_order(self, n_components: int) -> "EmConfig":
        return replace(self, max_iterations=self.budget_for(n_components))

    def floor_for(self, y_variance: float) -> float:
        return max(self.variance_floor_rel * y_variance, self.variance_floor_abs)


@dataclass(frozen=True)
class FitReport:
    loglik_trace: tuple[float, ...]
    delta_trace: tuple[float, ...]
    iterations_used: int
    converged: bool
    final_delta: float
    reseeds: tuple[tuple[int, int], ...] = field(default=())  # (iteration, component)

    @property
    def final_loglik(self) -> float:
        return self.loglik_trace[-1]
