"""
File: linemix/handlers/common.py

Project: linemix

Purpose:
Small helpers shared by the subcommand handlers:
- resolve --scenario / --spec into a ScenarioSpec
- build EmConfig from --epsilon / --max-iter
- turn fitted models and truth labels into report schemas
- write a JSON report to --out or stdout
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional

from pydantic import BaseModel

from linemix.core.types import Dataset, MixtureModel
from linemix.em.config import DEFAULT_EPSILON, EmConfig, FitReport
from linemix.errors import ConfigError
from linemix.evaluation.labels import Labeling
from linemix.evaluation.metrics import consistency, per_target_error
from linemix.io import schemas
from linemix.scenarios.catalog import ScenarioSpec, builtin

logger = logging.getLogger("handlers")


def resolve_scenario(args: argparse.Namespace) -> ScenarioSpec:
    scenario = getattr(args, "scenario", None)
    spec_file = getattr(args, "spec", None)
    if bool(scenario) == bool(spec_file):
        raise ConfigError("exactly one of --scenario or --spec is required")

    if scenario:
        spec = builtin(scenario)
    else:
        spec = schemas.load_scenario_file(spec_file)

    if args.seed is not None:
        spec = spec.with_seed(args.seed)
    return spec


def em_config(args: argparse.Namespace) -> EmConfig:
    epsilon = args.epsilon if args.epsilon is not None else DEFAULT_EPSILON
    return EmConfig(epsilon=epsilon, max_iterations=args.max_iter)


def components_out(mm: MixtureModel) -> list[schemas.ComponentOut]:
    return [
        schemas.ComponentOut(a=c.a, b=c.b, sigma2=c.sigma2, weight=float(w))
        for c, w in zip(mm.components, mm.weights)
    ]


def trace_out(report: FitReport) -> schemas.FitTraceOut:
    return schemas.FitTraceOut(
        loglik_trace=list(report.loglik_trace),
        delta_trace=list(report.delta_trace),
        iterations_used=report.iterations_used,
        converged=report.converged,
        final_delta=report.final_delta,
        reseeds=list(report.reseeds),
    )


def truth_metrics(d: Dataset, labeling: Labeling) -> Optional[schemas.TruthMetricsOut]:
    if not d.has_truth:
        return None
    truth = Labeling(d.truth)
    return schemas.TruthMetricsOut(
        consistency_percent=consistency(labeling, truth),
        per_target_error_percent=list(per_target_error(labeling, truth, n_targets=d.n_targets)),
    )


def emit(model: BaseModel, out: Optional[str]) -> None:
    text = schemas.dump_json(model)
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info("wrote %s", path)
    else:
        sys.stdout.write(text)
