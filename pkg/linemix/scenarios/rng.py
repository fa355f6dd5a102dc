"""
File: linemix/scenarios/rng.py

Project: linemix

Purpose:
Reproducible random streams for data generation and baselines.
- numpy's Philox (counter-based, 64-bit keyed) bit generator
- Gaussian draws by Box-Muller on pairs of uniforms, in a fixed order,
  so the stream does not depend on numpy's internal normal sampler
"""

from __future__ import annotations

import numpy as np
from numpy.random import Generator, Philox

_SEED_MASK = (1 << 64) - 1


def make_rng(seed: int) -> Generator:
    return Generator(Philox(int(seed) & _SEED_MASK))


def trial_seed(base_seed: int, trial: int) -> int:
    return (int(base_seed) + int(trial)) & _SEED_MASK


def box_muller(rng: Generator, size: int) -> np.ndarray:
    """
    Standard normal draws. Uniforms are consumed in pairs (u1, u2); both
    outputs of each pair are used, the last one dropped when size is odd.
    """
    if size <= 0:
        return np.empty(0)
    pairs = (size + 1) // 2
    u = rng.random(2 * pairs)
    u1 = 1.0 - u[0::2]  # (0, 1], keeps log finite
    u2 = u[1::2]
    radius = np.sqrt(-2.0 * np.log(u1))
    angle = 2.0 * np.pi * u2
    z = np.empty(2 * pairs)
    z[0::2] = radius * np.cos(angle)
    z[1::2] = radius * np.sin(angle)
    return z[:size]
