"""
linemix
Clustering of unlabeled 2-D radar position measurements into per-target
straight-line trajectories (EM over a mixture of linear regressions).
"""

__version__ = "0.1.0"
