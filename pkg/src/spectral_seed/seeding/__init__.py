"""K-Means clustering seeded with detected density peaks."""

from spectral_seed.seeding.base import (
    DuplicateCentroidError,
    KMeansResult,
    NoClustersDetectedError,
    TooManyClustersError,
)
from spectral_seed.seeding.kmeans import kmeans, seed_and_cluster

__all__ = [
    "DuplicateCentroidError",
    "KMeansResult",
    "NoClustersDetectedError",
    "TooManyClustersError",
    "kmeans",
    "seed_and_cluster",
]
