"""
File: linemix/selection/criteria.py

Project: linemix

Purpose:
Information-criterion penalties for choosing the number of targets.
With n_p(L) = 4L free parameters (a, b, sigma2, pi per target):
- AIC: 2 n_p
- GIC: (1 + rho) n_p, rho >= 1
- BIC: n_p log N
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from linemix.errors import ConfigError

PARAMS_PER_TARGET = 4
DEFAULT_RHO = 2.0


class CriterionKind(str, Enum):
    AIC = "aic"
    BIC = "bic"
    GIC = "gic"


@dataclass(frozen=True)
class Criterion:
    kind: CriterionKind
    rho: float = DEFAULT_RHO

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", CriterionKind(self.kind))
        if self.kind is CriterionKind.GIC and self.rho < 1.0:
            raise ConfigError(f"GIC needs rho >= 1, got {self.rho}")

    @property
    def name(self) -> str:
        return self.kind.value


def n_params(n_components: int) -> int:
    return PARAMS_PER_TARGET * n_components


def penalty(n_components: int, n_points: int, c: Criterion) -> float:
    n_p = n_params(n_components)
    if c.kind is CriterionKind.AIC:
        return 2.0 * n_p
    if c.kind is CriterionKind.GIC:
        return (1.0 + c.rho) * n_p
    return n_p * math.log(n_points)


def score(loglik: float, n_components: int, n_points: int, c: Criterion) -> float:
    return -2.0 * loglik + penalty(n_components, n_points, c)
