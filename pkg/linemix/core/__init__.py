"""
linemix/core
Domain types and densities shared by every module.
"""

from linemix.core.density import log_component_density, log_likelihood
from linemix.core.types import (
    ComponentParams,
    Dataset,
    Measurement,
    MixtureModel,
    Responsibilities,
)

__all__ = [
    "ComponentParams",
    "Dataset",
    "Measurement",
    "MixtureModel",
    "Responsibilities",
    "log_component_density",
    "log_likelihood",
]
