"""Shared fixtures: small deterministic batches."""

import numpy as np
import pytest

from linemix.core.types import Dataset
from linemix.scenarios.catalog import ScenarioSpec, TargetSpec, builtin
from linemix.scenarios.generate import generate


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for name in ("LINEMIX_LOG_LEVEL", "LINEMIX_WORKERS", "LINEMIX_TRIALS", "LINEMIX_DATABASE_URL"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def two_lines() -> Dataset:
    """Two well separated parallel lines, 10 points each, small known noise."""
    x = np.arange(1.0, 11.0)
    noise = np.array([0.3, -0.2, 0.1, -0.4, 0.2, 0.0, -0.1, 0.4, -0.3, 0.1])
    y1 = 2.0 * x + 1.0 + noise
    y2 = -1.0 * x + 80.0 - noise[::-1]
    return Dataset(
        x=np.concatenate([x, x]),
        y=np.concatenate([y1, y2]),
        truth=[1] * 10 + [2] * 10,
    )


@pytest.fixture
def scenario1_batch() -> Dataset:
    return generate(builtin("scenario1", seed=11))


@pytest.fixture
def small_spec() -> ScenarioSpec:
    """Two far-apart targets with few points: fast enough for bench tests."""
    return ScenarioSpec(
        targets=(TargetSpec(a=1.0, b=0.0, sigma2=4.0), TargetSpec(a=-1.0, b=400.0, sigma2=4.0)),
        n_range=(30, 40),
        seed=5,
        name="small",
    )
