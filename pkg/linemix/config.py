"""
File: linemix/config.py

Project: linemix

Purpose:
Process-level configuration, environment-driven.
- LINEMIX_LOG_LEVEL     (default INFO)
- LINEMIX_WORKERS       (default 1)
- LINEMIX_TRIALS        (default 100, desk scale)
- LINEMIX_DATABASE_URL  (optional; enables the bench trial store)

Numeric algorithm settings (EmConfig, Criterion, ...) live next to the
algorithms that use them. CLI flags override everything here.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from linemix.errors import ConfigError


def _int_env(name: str, default: int, *, minimum: int = 1) -> int:
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class HarnessSettings:
    log_level: str
    workers: int
    trials: int
    database_url: Optional[str]


def load_settings() -> HarnessSettings:
    return HarnessSettings(
        log_level=os.getenv("LINEMIX_LOG_LEVEL", "INFO").strip().upper() or "INFO",
        workers=_int_env("LINEMIX_WORKERS", 1),
        trials=_int_env("LINEMIX_TRIALS", 100),
        database_url=os.getenv("LINEMIX_DATABASE_URL", "").strip() or None,
    )
