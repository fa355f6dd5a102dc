"""
File: linemix/baselines/kmeans.py

Project: linemix

Purpose:
K-means baseline (unsupervised) on the raw (x, y) plane.
- k-means++ style seeding from the Philox stream
- Lloyd iterations until no centroid moves more than `tolerance`
- an empty cluster is moved onto the point farthest from its centroid
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist

from linemix.core.types import Dataset
from linemix.errors import ConfigError
from linemix.evaluation.labels import Labeling
from linemix.scenarios.rng import make_rng

logger = logging.getLogger("kmeans")


@dataclass(frozen=True)
class KMeansConfig:
    K: int
    max_iterations: int = 300
    tolerance: float = 1e-6
    seed: int = 0

    def __post_init__(self) -> None:
        if self.K < 1:
            raise ConfigError(f"K must be >= 1, got {self.K}")
        if self.max_iterations < 1:
            raise ConfigError("max_iterations must be >= 1")


@dataclass(frozen=True)
class KMeansResult:
    labeling: Labeling
    centroids: np.ndarray
    inertia_trace: tuple[float, ...]
    iterations: int


def _seed_centroids(points: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = points.shape[0]
    chosen = [int(rng.integers(0, n))]
    closest = cdist(points, points[chosen]).min(axis=1) ** 2
    for _ in range(1, k):
        total = float(closest.sum())
        if total > 0.0:
            idx = int(rng.choice(n, p=closest / total))
        else:
            idx = int(rng.integers(0, n))
        chosen.append(idx)
        closest = np.minimum(closest, cdist(points, points[idx : idx + 1]).ravel() ** 2)
    return points[chosen].copy()


def _assign(points: np.ndarray, centroids: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    dist2 = cdist(points, centroids, metric="sqeuclidean")
    labels = np.argmin(dist2, axis=1)
    return labels, dist2[np.arange(points.shape[0]), labels]


def kmeans_fit(d: Dataset, cfg: KMeansConfig) -> KMeansResult:
    if d.n < cfg.K:
        raise ConfigError(f"K-means needs N >= K, got N={d.n}, K={cfg.K}")
    points = d.xy()
    rng = make_rng(cfg.seed)
    centroids = _seed_centroids(points, cfg.K, rng)

    labels, nearest = _assign(points, centroids)
    trace = [float(nearest.sum())]
    iterations = 0

    for iterations in range(1, cfg.max_iterations + 1):
        updated = centroids.copy()
        for k in range(cfg.K):
            members = labels == k
            if members.any():
                updated[k] = points[members].mean(axis=0)
            else:
                far = int(np.argmax(nearest))
                updated[k] = points[far]
                nearest[far] = 0.0
                logger.debug("empty cluster %d moved to point %d", k + 1, far)

        shift = float(np.max(np.linalg.norm(updated - centroids, axis=1)))
        centroids = updated
        labels, nearest = _assign(points, centroids)
        trace.append(float(nearest.sum()))
        if shift <= cfg.tolerance:
            break

    return KMeansResult(
        labeling=Labeling(labels + 1),
        centroids=centroids,
        inertia_trace=tuple(trace),
        iterations=iterations,
    )


def kmeans(d: Dataset, cfg: KMeansConfig) -> Labeling:
    return kmeans_fit(d, cfg).labeling
