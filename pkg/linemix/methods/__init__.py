"""
linemix/methods
Clustering methods compared by the benchmark harness.
"""

from linemix.methods.factory import MethodSettings, build_method, parse_methods
from linemix.methods.gateway import ClusteringMethod, MethodName, MethodOutcome, TrialContext

__all__ = [
    "ClusteringMethod",
    "MethodName",
    "MethodOutcome",
    "MethodSettings",
    "TrialContext",
    "build_method",
    "parse_methods",
]
