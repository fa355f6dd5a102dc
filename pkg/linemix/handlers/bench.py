"""
File: linemix/handlers/bench.py

Project: linemix

Purpose:
`bench`: Monte-Carlo comparison of clustering methods on a scenario.

Writes report.json and the plot-data CSVs to --out, optionally stores
the run in the trial store (--db or LINEMIX_DATABASE_URL).

Exit code 3 when more than 5% of trials had a failed method.
"""

from __future__ import annotations

import argparse
import logging
from pathlib import Path

from linemix.config import HarnessSettings
from linemix.errors import ConfigError
from linemix.handlers.common import em_config, resolve_scenario
from linemix.methods.factory import MethodSettings, parse_methods
from linemix.selection.criteria import DEFAULT_RHO
from linemix.services.bench_service import (
    DEFAULT_L_MAX,
    MAX_FAILED_FRACTION,
    BenchConfig,
    BenchService,
    write_outputs,
)

logger = logging.getLogger("handlers.bench")

DEFAULT_METHODS = "em,kmeans,knn"
DEFAULT_OUT_DIR = "bench_out"
EXIT_TOO_MANY_FAILURES = 3


def handle_bench(args: argparse.Namespace, settings: HarnessSettings) -> int:
    spec = resolve_scenario(args)
    trials = args.trials if args.trials is not None else settings.trials
    if trials < 1:
        raise ConfigError(f"--trials must be >= 1, got {trials}")

    cfg = BenchConfig(
        scenario=spec,
        methods=parse_methods(args.methods or DEFAULT_METHODS),
        trials=trials,
        seed=spec.seed,
        em=em_config(args),
        l_max=args.lmax or spec.l_max or DEFAULT_L_MAX,
        method_settings=MethodSettings(rho=args.rho if args.rho is not None else DEFAULT_RHO),
    )
    report = BenchService(cfg, workers=args.workers or settings.workers).run()

    for path in write_outputs(report, _out_dir(args)):
        logger.info("wrote %s", path)

    db_url = args.db or settings.database_url
    if db_url:
        # optional store
        from linemix.db import make_session_factory
        from linemix.services.trial_store_service import TrialStoreService

        run_id = TrialStoreService(make_session_factory(db_url)).save_run(report)
        logger.info("bench run stored as %s", run_id)

    if report.failure_budget_exceeded:
        logger.error(
            "%d of %d trials failed (limit %.0f%%)",
            report.failed_trials,
            report.total_trials,
            100 * MAX_FAILED_FRACTION,
        )
        return EXIT_TOO_MANY_FAILURES
    return 0


def _out_dir(args: argparse.Namespace) -> Path:
    return Path(args.out or DEFAULT_OUT_DIR)
