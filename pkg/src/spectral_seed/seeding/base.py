"""Data types and errors for K-Means seeding."""

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from spectral_seed.exceptions import SpectralSeedError


class TooManyClustersError(SpectralSeedError, ValueError):
    """Raised when more initial centroids than points are given."""


class DuplicateCentroidError(SpectralSeedError, ValueError):
    """Raised when two initial centroids coincide."""


class NoClustersDetectedError(SpectralSeedError, ValueError):
    """Raised when seeding is attempted with an empty peak set."""


@dataclass(frozen=True, eq=False)
class KMeansResult:
    """Outcome of a Lloyd's K-Means run.

    Attributes:
        centroids: Final centroids, shape (k, 2).
        assignments: Cluster index per point, shape (N,).
        inertia: Sum of squared distances of points to their assigned centroid.
        iterations: Number of update steps performed.
        initial_centroids: Centroids the run started from, shape (k, 2).
        inertia_history: Inertia after the initial assignment and after every iteration.
        weights: Share of points per cluster, usable as mixture weights.
    """

    centroids: np.ndarray
    assignments: np.ndarray
    inertia: float
    iterations: int
    initial_centroids: np.ndarray
    inertia_history: list[float] = field(default_factory=list)
    weights: np.ndarray = field(default_factory=lambda: np.zeros(0))

    @property
    def k(self) -> int:
        """Number of clusters."""
        return int(self.centroids.shape[0])

    def to_dict(self) -> dict[str, Any]:
        """Serialize to a JSON-compatible dictionary (assignments excluded)."""
        return {
            "k": self.k,
            "initial_centroids": self.initial_centroids.tolist(),
            "centroids": self.centroids.tolist(),
            "inertia": self.inertia,
            "iterations": self.iterations,
            "weights": self.weights.tolist(),
            "inertia_history": list(self.inertia_history),
        }
