"""
File: linemix/baselines/knn.py

Project: linemix

Purpose:
K-nearest-neighbour baseline (supervised) on the raw (x, y) plane.

Protocol:
- split each true target 40 / 60 into train / held-out (seeded shuffle)
- each held-out point takes the majority truth label of its k nearest
  training points; ties go to the lowest label
- scoring happens on the held-out part only
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist

from linemix.core.types import Dataset
from linemix.errors import ConfigError, DatasetError
from linemix.evaluation.labels import Labeling
from linemix.scenarios.rng import make_rng


@dataclass(frozen=True)
class KnnConfig:
    k: int = 50
    train_fraction: float = 0.4
    seed: int = 0

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ConfigError(f"k must be >= 1, got {self.k}")
        if not 0.0 < self.train_fraction < 1.0:
            raise ConfigError(f"train_fraction must be in (0, 1), got {self.train_fraction}")


def stratified_split(d: Dataset, train_fraction: float, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Index arrays (train, held-out), both sorted. Every target keeps >= 1 training point."""
    if d.truth is None:
        raise DatasetError("stratified split needs truth labels")
    rng = make_rng(seed)
    train: list[np.ndarray] = []
    for t in range(1, d.n_targets + 1):
        members = np.flatnonzero(d.truth == t)
        if members.size == 0:
            continue
        shuffled = rng.permutation(members)
        n_train = max(1, int(round(train_fraction * members.size)))
        if members.size > 1:
            n_train = min(n_train, members.size - 1)
        train.append(shuffled[:n_train])
    train_idx = np.sort(np.concatenate(train))
    test_idx = np.setdiff1d(np.arange(d.n), train_idx)
    return train_idx, test_idx


def knn(train: Dataset, test: Dataset, cfg: KnnConfig) -> Labeling:
    if train.truth is None:
        raise DatasetError("KNN training set needs truth labels")
    if train.n < cfg.k:
        raise ConfigError(f"KNN needs at least k={cfg.k} training points, got {train.n}")

    dist = cdist(test.xy(), train.xy())
    # stable sort: among equidistant neighbours the earlier training point wins
    neighbours = np.argsort(dist, axis=1, kind="stable")[:, : cfg.k]
    votes = train.truth[neighbours]
    n_labels = int(train.truth.max()) + 1
    labels = np.array([np.argmax(np.bincount(row, minlength=n_labels)) for row in votes])
    return Labeling(labels)
