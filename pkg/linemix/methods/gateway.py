"""
File: linemix/methods/gateway.py

Project: linemix

Purpose:
Stable interface between the Monte-Carlo harness and the clustering
methods it compares (EM with known L, EM + order selection, K-means, KNN).

Each method receives one TrialContext and returns a MethodOutcome:
- labeling / truth: predicted labels and the truth they are scored against
  (KNN scores only its held-out part, everybody else the whole batch)
- components: fitted lines, only for methods that estimate them
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Optional, Protocol

from linemix.core.types import Dataset
from linemix.em.config import EmConfig
from linemix.evaluation.labels import Labeling
from linemix.selection.order import fit_orders


class MethodName(str, Enum):
    EM = "em"
    KMEANS = "kmeans"
    KNN = "knn"
    MOS_AIC = "mos-aic"
    MOS_BIC = "mos-bic"
    MOS_GIC = "mos-gic"

    @property
    def selects_order(self) -> bool:
        return self.value.startswith("mos-")


class TrialContext:
    """
    One trial's batch plus lazily shared work: the per-L fits are computed
    once and scored by every order-selection criterion.
    """

    def __init__(self, dataset: Dataset, *, seed: int, n_targets: int, l_max: int, em: EmConfig) -> None:
        self.dataset = dataset
        self.seed = seed
        self.n_targets = n_targets
        self.l_max = l_max
        self.em = em

    @property
    def truth(self) -> Labeling:
        return Labeling(self.dataset.truth)

    @cached_property
    def order_fits(self):
        return fit_orders(self.dataset, self.l_max, self.em)


@dataclass(frozen=True)
class MethodOutcome:
    labeling: Labeling
    truth: Labeling
    components: Optional[tuple[tuple[float, float, float], ...]] = None
    chosen_L: Optional[int] = None
    iterations_used: Optional[int] = None
    delta_trace: Optional[tuple[float, ...]] = None


class ClusteringMethod(Protocol):
    name: MethodName

    def run(self, ctx: TrialContext) -> MethodOutcome:
        """
        Cluster one batch. May raise LineMixError; the harness records the
        trial as failed.
        """
        ...
