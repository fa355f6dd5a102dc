"""
File: linemix/handlers/select.py

Project: linemix

Purpose:
`select`: estimate the number of targets with AIC / BIC / GIC, then
report the chosen fit and its MAP association.
"""

from __future__ import annotations

import argparse
import logging
import math
from typing import Optional

from linemix.config import HarnessSettings
from linemix.evaluation.labels import map_assign
from linemix.handlers.common import components_out, em_config, emit, trace_out, truth_metrics
from linemix.io import schemas
from linemix.io.csv_codec import read_dataset
from linemix.selection.criteria import DEFAULT_RHO, Criterion
from linemix.selection.order import select_order
from linemix.services.bench_service import DEFAULT_L_MAX

logger = logging.getLogger("handlers.select")


def _finite(value: float) -> Optional[float]:
    return value if math.isfinite(value) else None


def handle_select(args: argparse.Namespace, settings: HarnessSettings) -> int:
    d = read_dataset(args.input)
    l_max = args.lmax or DEFAULT_L_MAX
    rho = args.rho if args.rho is not None else DEFAULT_RHO
    criterion = Criterion(kind=args.criterion, rho=rho)
    cfg = em_config(args)
    workers = args.workers or settings.workers

    result = select_order(d, l_max, criterion, cfg, workers=workers)
    chosen = result.chosen_fit
    labeling = map_assign(chosen.responsibilities)

    report = schemas.SelectOut(
        input=str(args.input),
        n_points=d.n,
        criterion=criterion.name,
        rho=criterion.rho,
        l_max=l_max,
        epsilon=cfg.epsilon,
        scores=[
            schemas.OrderScoreOut(
                L=s.n_components,
                score=_finite(s.score),
                loglik=_finite(s.loglik),
                iterations=s.iterations,
                feasible=s.feasible,
                reason=s.reason,
            )
            for s in result.scores
        ],
        chosen_L=result.chosen_L,
        components=components_out(chosen.model),
        fit=trace_out(chosen.report),
        labels=[int(v) for v in labeling.labels],
        metrics=truth_metrics(d, labeling),
    )
    emit(report, args.out)
    return 0
