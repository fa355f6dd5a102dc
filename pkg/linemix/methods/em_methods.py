"""
File: linemix/methods/em_methods.py

Project: linemix

Purpose:
EM-based methods behind the ClusteringMethod interface.
- EmMethod: L known (set to the scenario's true number of targets)
- OrderSelectionMethod: L estimated in 1..L_max with AIC / BIC / GIC
"""

from __future__ import annotations

from linemix.em.fit import FitResult, fit_em
from linemix.evaluation.labels import map_assign
from linemix.methods.gateway import MethodName, MethodOutcome, TrialContext
from linemix.selection.criteria import Criterion
from linemix.selection.order import score_orders


def _outcome(ctx: TrialContext, result: FitResult, chosen_L=None) -> MethodOutcome:
    model = result.model
    return MethodOutcome(
        labeling=map_assign(result.responsibilities),
        truth=ctx.truth,
        components=tuple((c.a, c.b, c.sigma2) for c in model.components),
        chosen_L=chosen_L,
        iterations_used=result.report.iterations_used,
        delta_trace=result.report.delta_trace,
    )


class EmMethod:
    name = MethodName.EM

    def run(self, ctx: TrialContext) -> MethodOutcome:
        result = fit_em(ctx.dataset, ctx.n_targets, ctx.em.for_order(ctx.n_targets))
        return _outcome(ctx, result)


class OrderSelectionMethod:
    def __init__(self, name: MethodName, criterion: Criterion) -> None:
        self.name = name
        self._criterion = criterion

    def run(self, ctx: TrialContext) -> MethodOutcome:
        selection = score_orders(ctx.dataset, ctx.order_fits, self._criterion)
        return _outcome(ctx, selection.chosen_fit, chosen_L=selection.chosen_L)
