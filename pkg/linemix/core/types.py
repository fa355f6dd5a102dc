"""
File: linemix/core/types.py

Project: linemix

Purpose:
Domain types shared by every module.
- Measurement / Dataset: 2-D points with optional truth labels
- ComponentParams / MixtureModel: per-target line (a, b, sigma2) and weights
- Responsibilities: N x L posterior matrix

Design rules:
- All types are immutable after construction (numpy buffers are made read-only)
- Invariants are checked once, in __post_init__
- Coordinates are float64; no unit conversion anywhere
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from linemix.errors import DatasetError, ModelError

# Variance floor policy: max(REL * var(y), ABS)
VARIANCE_FLOOR_REL = 1e-9
VARIANCE_FLOOR_ABS = 1e-12

WEIGHT_SUM_TOL = 1e-12
ROW_SUM_TOL = 1e-12


def _frozen_array(values, dtype) -> np.ndarray:
    arr = np.array(values, dtype=dtype, copy=True)
    arr.setflags(write=False)
    return arr


# ---------------------------------------------------------------------
# Measurements
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class Measurement:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DatasetError(f"measurement coordinates must be finite, got ({self.x}, {self.y})")


@dataclass(frozen=True, eq=False)
class Dataset:
    """
    Ordered measurements, stored column-wise.

    truth, when present, holds the generating target of each point
    (labels start at 1).
    """

    x: np.ndarray
    y: np.ndarray
    truth: Optional[np.ndarray] = None

    def __post_init__(self) -> None:
        x = _frozen_array(self.x, np.float64).ravel()
        y = _frozen_array(self.y, np.float64).ravel()
        if x.size == 0:
            raise DatasetError("dataset must contain at least one measurement")
        if x.shape != y.shape:
            raise DatasetError(f"x and y lengths differ ({x.size} vs {y.size})")
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
            raise DatasetError("measurement coordinates must be finite")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

        if self.truth is not None:
            truth = _frozen_array(self.truth, np.int64).ravel()
            if truth.shape != x.shape:
                raise DatasetError(f"truth has {truth.size} labels for {x.size} measurements")
            if truth.min() < 1:
                raise DatasetError("truth labels start at 1")
            object.__setattr__(self, "truth", truth)

    @classmethod
    def from_points(
        cls,
        points: Iterable[Measurement],
        truth: Optional[Sequence[int]] = None,
    ) -> "Dataset":
        pts = list(points)
        return cls(
            x=[p.x for p in pts],
            y=[p.y for p in pts],
            truth=None if truth is None else list(truth),
        )

    @property
    def n(self) -> int:
        return int(self.x.size)

    @property
    def points(self) -> tuple[Measurement, ...]:
        return tuple(Measurement(float(a), float(b)) for a, b in zip(self.x, self.y))

    @property
    def has_truth(self) -> bool:
        return self.truth is not None

    @property
    def n_targets(self) -> int:
        if self.truth is None:
            raise DatasetError("dataset carries no truth labels")
        return int(self.truth.max())

    def subset(self, index: np.ndarray) -> "Dataset":
        return Dataset(
            x=self.x[index],
            y=self.y[index],
            truth=None if self.truth is None else self.truth[index],
        )

    def variance_floor(self) -> float:
        return max(VARIANCE_FLOOR_REL * float(np.var(self.y)), VARIANCE_FLOOR_ABS)

    def xy(self) -> np.ndarray:
        return np.column_stack([self.x, self.y])


# ---------------------------------------------------------------------
# Model
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class ComponentParams:
    a: float
    b: float
    sigma2: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise ModelError(f"component line must be finite, got a={self.a} b={self.b}")
        if not (math.isfinite(self.sigma2) and self.sigma2 > 0.0):
            raise ModelError(f"component variance must be positive, got {self.sigma2}")

    def floored(self, floor: float) -> "ComponentParams":
        if self.sigma2 >= floor:
            return self
        return ComponentParams(a=self.a, b=self.b, sigma2=floor)


@dataclass(frozen=True, eq=False)
class MixtureModel:
    components: tuple[ComponentParams, ...]
    weights: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        comps = tuple(self.components)
        if not comps:
            raise ModelError("mixture needs at least one component")
        object.__setattr__(self, "components", comps)

        weights = self.weights
        if weights is None:
            weights = np.full(len(comps), 1.0 / len(comps))
        w = _frozen_array(weights, np.float64).ravel()
        if w.size != len(comps):
            raise ModelError(f"{w.size} weights for {len(comps)} components")
        if np.any(w < 0.0) or not np.all(np.isfinite(w)):
            raise ModelError("mixture weights must be finite and nonnegative")
        if abs(float(w.sum()) - 1.0) > WEIGHT_SUM_TOL:
            raise ModelError(f"mixture weights sum to {float(w.sum())!r}, expected 1")
        object.__setattr__(self, "weights", w)

    @classmethod
    def from_arrays(cls, a, b, sigma2, weights) -> "MixtureModel":
        comps = tuple(
            ComponentParams(float(ai), float(bi), float(si)) for ai, bi, si in zip(a, b, sigma2)
        )
        return cls(components=comps, weights=weights)

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def slopes(self) -> np.ndarray:
        return np.array([c.a for c in self.components])

    @property
    def intercepts(self) -> np.ndarray:
        return np.array([c.b for c in self.components])

    @property
    def variances(self) -> np.ndarray:
        return np.array([c.sigma2 for c in self.components])

    def permuted(self, order: Sequence[int]) -> "MixtureModel":
        order = list(order)
        return MixtureModel(
            components=tuple(self.components[i] for i in order),
            weights=self.weights[order],
        )


@dataclass(frozen=True, eq=False)
class Responsibilities:
    """N x L matrix; entry (n, l) is the posterior of target l for point n."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        r = _frozen_array(self.matrix, np.float64)
        if r.ndim != 2 or r.shape[0] < 1 or r.shape[1] < 1:
            raise ModelError(f"responsibilities must be a non-empty N x L matrix, got shape {r.shape}")
        if np.any(r < 0.0) or np.any(r > 1.0) or not np.all(np.isfinite(r)):
            raise ModelError("responsibilities must lie in [0, 1]")
        row_err = np.max(np.abs(r.sum(axis=1) - 1.0))
        if row_err > ROW_SUM_TOL:
            raise ModelError(f"responsibility rows must sum to 1 (max error {row_err:.3e})")
        object.__setattr__(self, "matrix", r)

    @property
    def n(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def n_components(self) -> int:
        return int(self.matrix.shape[1])

    def column(self, l: int) -> np.ndarray:
        return self.matrix[:, l]
