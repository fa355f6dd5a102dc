"""
File: linemix/evaluation/labels.py

Project: linemix

Purpose:
- MAP assignment of measurements to components
- Cluster-to-target correspondence for scoring (optimal assignment over
  the contingency table, scipy's linear_sum_assignment)

Labels are 1-based everywhere outside numpy indexing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from linemix.core.types import Responsibilities
from linemix.errors import DatasetError


@dataclass(frozen=True, eq=False)
class Labeling:
    labels: np.ndarray

    def __post_init__(self) -> None:
        labels = np.array(self.labels, dtype=np.int64, copy=True).ravel()
        if labels.size == 0:
            raise DatasetError("labeling must not be empty")
        if labels.min() < 1:
            raise DatasetError("labels start at 1")
        labels.setflags(write=False)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def of(cls, labels: Sequence[int]) -> "Labeling":
        return cls(np.asarray(labels))

    @property
    def n(self) -> int:
        return int(self.labels.size)

    @property
    def n_clusters(self) -> int:
        return int(self.labels.max())

    def relabeled(self, mapping: dict[int, int]) -> "Labeling":
        return Labeling(np.array([mapping[int(l)] for l in self.labels]))


@dataclass(frozen=True)
class LabelMatch:
    """
    mapping: predicted cluster -> true target (None when left unmatched)
    agreements: number of points whose matched cluster equals their target
    """

    mapping: dict[int, Optional[int]]
    agreements: int


def map_assign(r: Responsibilities) -> Labeling:
    # np.argmax returns the first maximum: ties go to the lowest index
    return Labeling(np.argmax(r.matrix, axis=1) + 1)


def contingency(pred: Labeling, truth: Labeling, n_clusters: Optional[int] = None, n_targets: Optional[int] = None) -> np.ndarray:
    if pred.n != truth.n:
        raise DatasetError(f"labelings differ in length ({pred.n} vs {truth.n})")
    k_p = max(pred.n_clusters, n_clusters or 0)
    k_t = max(truth.n_clusters, n_targets or 0)
    table = np.zeros((k_p, k_t), dtype=np.int64)
    np.add.at(table, (pred.labels - 1, truth.labels - 1), 1)
    return table


def match_labels(pred: Labeling, truth: Labeling, n_targets: Optional[int] = None) -> LabelMatch:
    table = contingency(pred, truth, n_targets=n_targets)
    rows, cols = linear_sum_assignment(table, maximize=True)
    mapping: dict[int, Optional[int]] = {k + 1: None for k in range(table.shape[0])}
    for r, c in zip(rows, cols):
        mapping[int(r) + 1] = int(c) + 1
    agreements = int(table[rows, cols].sum())
    return LabelMatch(mapping=mapping, agreements=agreements)
