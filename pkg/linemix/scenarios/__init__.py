"""
linemix/scenarios
Synthetic multi-target measurement batches.
"""

from linemix.scenarios.catalog import BUILTIN_NAMES, ScenarioSpec, TargetSpec, builtin
from linemix.scenarios.generate import generate

__all__ = ["BUILTIN_NAMES", "ScenarioSpec", "TargetSpec", "builtin", "generate"]
