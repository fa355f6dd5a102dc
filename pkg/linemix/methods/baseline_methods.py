"""
File: linemix/methods/baseline_methods.py

Project: linemix

Purpose:
K-means and KNN behind the ClusteringMethod interface.
Neither estimates line parameters, so components stay None.
"""

from __future__ import annotations

from dataclasses import replace

from linemix.baselines.kmeans import KMeansConfig, kmeans
from linemix.baselines.knn import KnnConfig, knn, stratified_split
from linemix.evaluation.labels import Labeling
from linemix.methods.gateway import MethodName, MethodOutcome, TrialContext


class KMeansMethod:
    name = MethodName.KMEANS

    def __init__(self, cfg: KMeansConfig) -> None:
        self._cfg = cfg

    def run(self, ctx: TrialContext) -> MethodOutcome:
        # K = true number of targets, seeded per trial
        cfg = replace(self._cfg, K=ctx.n_targets, seed=ctx.seed)
        return MethodOutcome(labeling=kmeans(ctx.dataset, cfg), truth=ctx.truth)


class KnnMethod:
    name = MethodName.KNN

    def __init__(self, cfg: KnnConfig) -> None:
        self._cfg = cfg

    def run(self, ctx: TrialContext) -> MethodOutcome:
        train_idx, test_idx = stratified_split(ctx.dataset, self._cfg.train_fraction, ctx.seed)
        train = ctx.dataset.subset(train_idx)
        test = ctx.dataset.subset(test_idx)
        return MethodOutcome(labeling=knn(train, test, self._cfg), truth=Labeling(test.truth))
