"""
File: linemix/scenarios/catalog.py

Project: linemix

Purpose:
Generative scenario descriptions and the three built-in benchmark scenarios.

Built-ins (all sigma2 = 50, per-target counts uniform in [60, 90]):
- scenario1: 5 crossing targets, L known
- scenario2: 10 crossing targets, L known
- scenario3: 3 targets, L unknown (searched up to L_max = 10)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional

from linemix.errors import ScenarioError

DEFAULT_N_RANGE = (60, 90)
BENCH_SIGMA2 = 50.0


@dataclass(frozen=True)
class TargetSpec:
    a: float
    b: float
    sigma2: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise ScenarioError(f"target line must be finite, got a={self.a} b={self.b}")
        if not (math.isfinite(self.sigma2) and self.sigma2 > 0.0):
            raise ScenarioError(f"target variance must be > 0, got {self.sigma2}")


@dataclass(frozen=True)
class ScenarioSpec:
    """
    x values are integers drawn uniformly (with replacement) from 1..N,
    N being the realised total number of measurements of the trial.
    """

    targets: tuple[TargetSpec, ...]
    n_range: tuple[int, int] = DEFAULT_N_RANGE
    seed: int = 0
    name: str = "custom"
    l_max: Optional[int] = None

    def __post_init__(self) -> None:
        targets = tuple(self.targets)
        if not targets:
            raise ScenarioError("a scenario needs at least one target")
        lo, hi = (int(v) for v in self.n_range)
        if lo < 1 or hi < lo:
            raise ScenarioError(f"n_range must satisfy 1 <= lo <= hi, got [{lo}, {hi}]")
        object.__setattr__(self, "targets", targets)
        object.__setattr__(self, "n_range", (lo, hi))

    @property
    def n_targets(self) -> int:
        return len(self.targets)

    @property
    def true_params(self) -> tuple[tuple[float, float], ...]:
        return tuple((t.a, t.b) for t in self.targets)

    def with_seed(self, seed: int) -> "ScenarioSpec":
        return replace(self, seed=seed)


def _targets(*lines: tuple[float, float]) -> tuple[TargetSpec, ...]:
    return tuple(TargetSpec(a=a, b=b, sigma2=BENCH_SIGMA2) for a, b in lines)


_BUILTIN = {
    "scenario1": dict(
        targets=_targets(
            (-1.4826, 671.0),
            (-0.8391, 310.0),
            (0.5774, -434.0),
            (1.0, -110.0),
            (1.8040, 430.0),
        ),
    ),
    "scenario2": dict(
        targets=_targets(
            (-4.0108, -4897.0),
            (14.3007, -6230.0),
            (0.0875, -2936.0),
            (-1.9626, -1774.0),
            (1.1504, 330.0),
            (-0.7265, 1997.0),
            (0.4663, 3245.0),
            (0.5774, 4588.0),
            (2.6051, 5846.0),
            (-2.4751, 6706.0),
        ),
    ),
    "scenario3": dict(
        targets=_targets(
            (-1.8807, 771.0),
            (-0.2679, 410.0),
            (1.0, -129.0),
        ),
        l_max=10,
    ),
}

BUILTIN_NAMES = tuple(_BUILTIN)


def builtin(name: str, seed: int = 0) -> ScenarioSpec:
    try:
        params = _BUILTIN[name]
    except KeyError:
        raise ScenarioError(
            f"unknown scenario {name!r}; valid names: {', '.join(BUILTIN_NAMES)}"
        ) from None
    return ScenarioSpec(name=name, seed=seed, **params)
