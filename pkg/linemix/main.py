"""
File: linemix/main.py

Project: linemix

Purpose:
Command-line entry point.
Responsible only for:
- argument parsing (simulate / fit / select / bench)
- logging setup from LINEMIX_LOG_LEVEL
- mapping errors to exit codes

Design principles:
- No algorithm code in this file
- All work is delegated to linemix.handlers

Exit codes:
- 0 success
- 1 unexpected error (logged with traceback)
- 2 LineMixError (bad input, infeasible fit, ...)
- 3 bench: too many failed trials
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

from linemix import __version__
from linemix.config import load_settings
from linemix.errors import LineMixError
from linemix.handlers.bench import handle_bench
from linemix.handlers.fit import handle_fit
from linemix.handlers.select import handle_select
from linemix.handlers.simulate import handle_simulate
from linemix.scenarios.catalog import BUILTIN_NAMES
from linemix.selection.criteria import CriterionKind

logger = logging.getLogger("linemix")

EXIT_UNEXPECTED = 1
EXIT_LINEMIX_ERROR = 2


# -------------------------------------------------------------------
# Parser
# -------------------------------------------------------------------
def _add_scenario_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--scenario", choices=BUILTIN_NAMES, help="built-in scenario")
    p.add_argument("--spec", help="scenario spec file (JSON)")
    p.add_argument("--seed", type=int, default=None, help="overrides the scenario seed")


def _add_em_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--epsilon", type=float, default=None, help="relative log-likelihood tolerance")
    p.add_argument("--max-iter", dest="max_iter", type=int, default=None, help="EM iteration budget")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linemix",
        description="Measurement-to-target association with mixtures of linear regressions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="draw one batch of measurements to CSV")
    _add_scenario_args(p)
    p.add_argument("--out", help="output CSV path")
    p.set_defaults(handler=handle_simulate)

    p = sub.add_parser("fit", help="EM with a known number of targets")
    p.add_argument("input", help="input CSV (x,y or x,y,label)")
    p.add_argument("--L", dest="L", type=int, default=None, help="number of targets")
    _add_em_args(p)
    p.add_argument("--out", help="JSON report path (default: stdout)")
    p.set_defaults(handler=handle_fit)

    p = sub.add_parser("select", help="estimate the number of targets")
    p.add_argument("input", help="input CSV (x,y or x,y,label)")
    p.add_argument("--lmax", type=int, default=None, help="largest L tried (default 10)")
    p.add_argument(
        "--criterion",
        choices=[k.value for k in CriterionKind],
        default=CriterionKind.BIC.value,
    )
    p.add_argument("--rho", type=float, default=None, help="GIC rho (default 2)")
    _add_em_args(p)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", help="JSON report path (default: stdout)")
    p.set_defaults(handler=handle_select)

    p = sub.add_parser("bench", help="Monte-Carlo comparison of methods")
    _add_scenario_args(p)
    p.add_argument("--methods", default=None, help="comma list: em,kmeans,knn,mos-aic,mos-bic,mos-gic")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--lmax", type=int, default=None)
    p.add_argument("--rho", type=float, default=None)
    _add_em_args(p)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", help="output directory (default bench_out)")
    p.add_argument("--db", default=None, help="SQLAlchemy URL of the trial store")
    p.set_defaults(handler=handle_bench)

    return parser


# -------------------------------------------------------------------
# Entry
# -------------------------------------------------------------------
def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        settings = load_settings()
    except LineMixError as exc:
        logging.basicConfig(level=logging.INFO)
        logger.error("%s", exc)
        return EXIT_LINEMIX_ERROR

    logging.basicConfig(
        level=getattr(logging, settings.log_level, logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        return args.handler(args, settings)
    except LineMixError as exc:
        logger.error("%s: %s", args.command, exc)
        return EXIT_LINEMIX_ERROR
    except Exception:
        logger.exception("%s: unexpected error", args.command)
        return EXIT_UNEXPECTED


if __name__ == "__main__":
    sys.exit(main())
