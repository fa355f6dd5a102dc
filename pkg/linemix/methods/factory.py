"""
File: linemix/methods/factory.py

Project: linemix

Purpose:
Build ClusteringMethod instances from their CLI names.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from linemix.baselines.kmeans import KMeansConfig
from linemix.baselines.knn import KnnConfig
from linemix.errors import ConfigError
from linemix.methods.baseline_methods import KMeansMethod, KnnMethod
from linemix.methods.em_methods import EmMethod, OrderSelectionMethod
from linemix.methods.gateway import ClusteringMethod, MethodName
from linemix.selection.criteria import DEFAULT_RHO, Criterion, CriterionKind


@dataclass(frozen=True)
class MethodSettings:
    rho: float = DEFAULT_RHO
    knn: KnnConfig = KnnConfig()
    # K is replaced by the true number of targets at run time
    kmeans: KMeansConfig = KMeansConfig(K=1)


def parse_methods(raw: str | Iterable[str]) -> tuple[MethodName, ...]:
    names = raw.split(",") if isinstance(raw, str) else list(raw)
    parsed: list[MethodName] = []
    for name in names:
        name = name.strip().lower()
        if not name:
            continue
        try:
            method = MethodName(name)
        except ValueError:
            valid = ", ".join(m.value for m in MethodName)
            raise ConfigError(f"unknown method {name!r}; valid methods: {valid}") from None
        if method not in parsed:
            parsed.append(method)
    if not parsed:
        raise ConfigError("at least one method is required")
    return tuple(parsed)


def build_method(name: MethodName, settings: MethodSettings) -> ClusteringMethod:
    if name is MethodName.EM:
        return EmMethod()
    if name is MethodName.KMEANS:
        return KMeansMethod(settings.kmeans)
    if name is MethodName.KNN:
        return KnnMethod(settings.knn)
    kind = CriterionKind(name.value.split("-", 1)[1])
    return OrderSelectionMethod(name, Criterion(kind=kind, rho=settings.rho))
