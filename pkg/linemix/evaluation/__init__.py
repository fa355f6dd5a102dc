"""
linemix/evaluation
Association and scoring.
"""

from linemix.evaluation.labels import LabelMatch, Labeling, map_assign, match_labels
from linemix.evaluation.metrics import (
    MetricsReport,
    PrmseResult,
    consistency,
    per_target_error,
    prmse,
    rmse_count,
)

__all__ = [
    "LabelMatch",
    "Labeling",
    "MetricsReport",
    "PrmseResult",
    "consistency",
    "map_assign",
    "match_labels",
    "per_target_error",
    "prmse",
    "rmse_count",
]
