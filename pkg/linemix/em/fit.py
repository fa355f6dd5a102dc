"""
File: linemix/em/fit.py

Project: linemix

Purpose:
EM loop for a fixed number of components L.

Flow per iteration h:
- E-step on the model of iteration h-1
- M-step (weights, then each line); empty components are re-seeded
- relative change of the log-likelihood, stop when below epsilon

Rules:
- Deterministic given (dataset, L, cfg, initial model)
- Re-seeding the same component on two consecutive iterations aborts the fit
"""

from __future__ import annotations

import logging
from typing import NamedTuple, Optional

import numpy as np

from linemix.core.density import log_likelihood
from linemix.core.types import ComponentParams, Dataset, MixtureModel, Responsibilities
from linemix.em.config import EmConfig, FitReport
from linemix.em.init import initialize
from linemix.em.steps import e_step, m_step_component, m_step_weights
from linemix.errors import EmptyComponentError, FitAbortedError
from linemix.evaluation.labels import Labeling, map_assign

logger = logging.getLogger("em_fit")


class FitResult(NamedTuple):
    model: MixtureModel
    responsibilities: Responsibilities
    report: FitReport


def relative_change(current: float, previous: float) -> float:
    if current == 0.0:
        return 0.0
    return abs(current - previous) / abs(current)


def _reseed(
    d: Dataset,
    r: Responsibilities,
    previous: ComponentParams,
    taken: set[int],
    floor: float,
) -> tuple[ComponentParams, int]:
    # hardest point: lowest maximum responsibility, lowest index on ties
    hardness = r.matrix.max(axis=1)
    for n in np.argsort(hardness, kind="stable"):
        if int(n) not in taken:
            break
    n = int(n)
    a = previous.a if np.isfinite(previous.a) else 0.0
    b = float(d.y[n] - a * d.x[n])
    sigma2 = max(float(np.var(d.y)), floor)
    return ComponentParams(a=a, b=b, sigma2=sigma2), n


def _maximize(
    d: Dataset,
    r: Responsibilities,
    previous: MixtureModel,
    *,
    floor: float,
    min_mass: float,
    iteration: int,
    last_reseed: dict[int, int],
) -> tuple[MixtureModel, list[int]]:
    weights = m_step_weights(r).copy()
    comps: list[ComponentParams] = []
    reseeded: list[int] = []
    taken: set[int] = set()

    for l in range(r.n_components):
        try:
            comps.append(m_step_component(d, r.column(l), floor=floor, min_mass=min_mass, component=l + 1))
        except EmptyComponentError as exc:
            if last_reseed.get(l) == iteration - 1:
                raise FitAbortedError(
                    f"component {l + 1} re-seeded on consecutive iterations "
                    f"{iteration - 1} and {iteration}: {exc}"
                ) from exc
            comp, point = _reseed(d, r, previous.components[l], taken, floor)
            taken.add(point)
            comps.append(comp)
            weights[l] = 1.0 / d.n
            last_reseed[l] = iteration
            reseeded.append(l)
            logger.warning(
                "iteration %d: %s; re-seeded at point %d",
                iteration,
                exc,
                point,
            )

    return MixtureModel(components=tuple(comps), weights=weights / weights.sum()), reseeded


def fit_em(
    d: Dataset,
    n_components: int,
    cfg: Optional[EmConfig] = None,
    *,
    initial: Optional[MixtureModel] = None,
) -> FitResult:
    cfg = cfg or EmConfig()
    budget = cfg.budget_for(n_components)
    floor = cfg.floor_for(float(np.var(d.y)))
    min_mass = cfg.empty_component_fraction * d.n

    model = initial if initial is not None else initialize(d, n_components, cfg)
    ll = log_likelihood(d, model)
    trace = [ll]
    deltas: list[float] = []
    reseeds: list[tuple[int, int]] = []
    last_reseed: dict[int, int] = {}
    converged = False
    delta = float("inf")
    h = 0

    for h in range(1, budget + 1):
        r = e_step(d, model)
        model, reseeded = _maximize(
            d,
            r,
            model,
            floor=floor,
            min_mass=min_mass,
            iteration=h,
            last_reseed=last_reseed,
        )
        reseeds.extend((h, l) for l in reseeded)

        ll_new = log_likelihood(d, model)
        delta = relative_change(ll_new, ll)
        trace.append(ll_new)
        deltas.append(delta)
        ll = ll_new
        logger.debug("iteration %d: loglik=%.10g delta=%.3e", h, ll, delta)

        if delta < cfg.epsilon and not reseeded:
            converged = True
            break

    if not converged:
        logger.info("EM with L=%d stopped at the budget of %d iterations (delta=%.3e)", n_components, budget, delta)

    report = FitReport(
        loglik_trace=tuple(trace),
        delta_trace=tuple(deltas),
        iterations_used=h,
        converged=converged,
        final_delta=delta if deltas else 0.0,
        reseeds=tuple(reseeds),
    )
    return FitResult(model=model, responsibilities=e_step(d, model), report=report)


def associate(d: Dataset, mm: MixtureModel) -> Labeling:
    return map_assign(e_step(d, mm))
