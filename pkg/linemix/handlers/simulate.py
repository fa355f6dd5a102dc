"""
File: linemix/handlers/simulate.py

Project: linemix

Purpose:
`simulate`: draw one batch from a scenario and write it as CSV
(header x,y,label, 17 significant digits).
"""

from __future__ import annotations

import argparse
import logging

from linemix.config import HarnessSettings
from linemix.errors import ConfigError
from linemix.handlers.common import resolve_scenario
from linemix.io.csv_codec import write_dataset
from linemix.scenarios.generate import generate

logger = logging.getLogger("handlers.simulate")


def handle_simulate(args: argparse.Namespace, settings: HarnessSettings) -> int:
    if not args.out:
        raise ConfigError("simulate needs --out")

    spec = resolve_scenario(args)
    d = generate(spec)
    try:
        write_dataset(d, args.out)
    except OSError as exc:
        raise ConfigError(f"cannot write {args.out}: {exc}") from None

    logger.info("simulate %s seed=%d: %d measurements -> %s", spec.name, spec.seed, d.n, args.out)
    return 0
