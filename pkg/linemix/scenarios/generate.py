"""
File: linemix/scenarios/generate.py

Project: linemix

Purpose:
Draw one labeled synthetic dataset from a ScenarioSpec.

Draw order (fixed, so a seed fully determines the output):
1. N_1..N_L, uniform integers in n_range
2. x for target 1, then target 2, ... (integers uniform in 1..N)
3. Gaussian noise for target 1, then target 2, ...
"""

from __future__ import annotations

import numpy as np

from linemix.core.types import Dataset
from linemix.scenarios.catalog import ScenarioSpec
from linemix.scenarios.rng import box_muller, make_rng


def generate(spec: ScenarioSpec) -> Dataset:
    rng = make_rng(spec.seed)
    lo, hi = spec.n_range

    counts = [int(rng.integers(lo, hi + 1)) for _ in spec.targets]
    total = sum(counts)
    xs = [rng.integers(1, total + 1, size=n).astype(np.float64) for n in counts]
    noises = [box_muller(rng, n) for n in counts]

    ys = [
        t.a * x + t.b + np.sqrt(t.sigma2) * z
        for t, x, z in zip(spec.targets, xs, noises)
    ]
    labels = [np.full(n, l, dtype=np.int64) for l, n in enumerate(counts, start=1)]
    return Dataset(x=np.concatenate(xs), y=np.concatenate(ys), truth=np.concatenate(labels))
