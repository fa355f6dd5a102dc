"""
linemix/em
Expectation-maximization for a mixture of linear regressions, fixed L.
"""

from linemix.em.config import EmConfig, FitReport
from linemix.em.fit import FitResult, associate, fit_em
from linemix.em.init import initialize
from linemix.em.steps import e_step, m_step_component, m_step_weights

__all__ = [
    "EmConfig",
    "FitReport",
    "FitResult",
    "associate",
    "e_step",
    "fit_em",
    "initialize",
    "m_step_component",
    "m_step_weights",
]
