"""
File: linemix/handlers/fit.py

Project: linemix

Purpose:
`fit`: EM with a known number of targets on a CSV batch.
Reports components, the log-likelihood trace and MAP labels; adds
consistency metrics when the CSV carries a label column.
"""

from __future__ import annotations

import argparse
import logging

from linemix.config import HarnessSettings
from linemix.em.fit import fit_em
from linemix.errors import ConfigError
from linemix.evaluation.labels import map_assign
from linemix.handlers.common import components_out, em_config, emit, trace_out, truth_metrics
from linemix.io import schemas
from linemix.io.csv_codec import read_dataset

logger = logging.getLogger("handlers.fit")


def handle_fit(args: argparse.Namespace, settings: HarnessSettings) -> int:
    if args.L is None:
        raise ConfigError("fit needs --L")

    d = read_dataset(args.input)
    cfg = em_config(args).for_order(args.L)
    result = fit_em(d, args.L, cfg)
    labeling = map_assign(result.responsibilities)

    if not result.report.converged:
        logger.warning(
            "fit did not converge in %d iterations (last delta %.3g)",
            result.report.iterations_used,
            result.report.final_delta,
        )

    report = schemas.FitOut(
        input=str(args.input),
        n_points=d.n,
        n_components=args.L,
        config=schemas.EmConfigOut(epsilon=cfg.epsilon, max_iterations=cfg.max_iterations),
        components=components_out(result.model),
        fit=trace_out(result.report),
        labels=[int(v) for v in labeling.labels],
        metrics=truth_metrics(d, labeling),
    )
    emit(report, args.out)
    return 0
