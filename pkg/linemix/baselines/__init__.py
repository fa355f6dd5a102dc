"""
linemix/baselines
Reference clusterers the EM approach is compared against.
"""

from linemix.baselines.kmeans import KMeansConfig, KMeansResult, kmeans, kmeans_fit
from linemix.baselines.knn import KnnConfig, knn, stratified_split

__all__ = [
    "KMeansConfig",
    "KMeansResult",
    "KnnConfig",
    "kmeans",
    "kmeans_fit",
    "knn",
    "stratified_split",
]
