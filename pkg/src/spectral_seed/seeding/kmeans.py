"""Lloyd's K-Means seeded with detected density peaks.

The number of peaks fixes k and their coordinates are the initial centroids, so
no random restarts are needed.

Example usage:
    peaks, _ = detect(field)
    result = seed_and_cluster(points, peaks)
    print(result.centroids, result.inertia)
"""

import logging
from typing import TYPE_CHECKING

import numpy as np

from spectral_seed.conf import settings
from spectral_seed.seeding.base import (
    DuplicateCentroidError,
    KMeansResult,
    NoClustersDetectedError,
    TooManyClustersError,
)

if TYPE_CHECKING:
    from spectral_seed.grid import PointSet
    from spectral_seed.peaks import PeakSet

logger = logging.getLogger(__name__)


def _assign(coords: np.ndarray, centroids: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Nearest centroid per point (smallest index on exact ties) and the squared distance to it."""
    sq_dist = np.sum((coords[:, np.newaxis, :] - centroids[np.newaxis, :, :]) ** 2, axis=2)
    labels = np.argmin(sq_dist, axis=1)
    return labels, sq_dist[np.arange(coords.shape[0]), labels]


def _update(coords: np.ndarray, labels: np.ndarray, sq_dist: np.ndarray, centroids: np.ndarray) -> np.ndarray:
    """Move each centroid to the mean of its points; re-seed empty clusters at the farthest points."""
    k = centroids.shape[0]
    counts = np.bincount(labels, minlength=k)
    sums = np.zeros_like(centroids)
    np.add.at(sums, labels, coords)

    updated = centroids.copy()
    filled = counts > 0
    updated[filled] = sums[filled] / counts[filled, np.newaxis]

    empty = np.flatnonzero(~filled)
    if empty.size:
        # Farthest points first, stable so equal distances keep point order
        farthest = np.argsort(-sq_dist, kind="stable")[: empty.size]
        for cluster, point in zip(empty, farthest, strict=True):
            logger.warning("Cluster %d is empty, re-seeding it at point %d", cluster, point)
            updated[cluster] = coords[point]
    return updated


def kmeans(
    points: PointSet,
    init: np.ndarray,
    max_iter: int | None = None,
    tol: float | None = None,
) -> KMeansResult:
    """Run Lloyd's algorithm from the given initial centroids.

    Each iteration moves every centroid to the mean of its points and reassigns
    the points. The run stops when no centroid moved by tol or more, or after
    max_iter iterations.

    Args:
        points: Observations to cluster.
        init: Initial centroids, shape (k, 2), pairwise distinct.
        max_iter: Maximum number of iterations. Defaults to settings.KMEANS_MAX_ITER.
        tol: Largest centroid shift regarded as converged. Defaults to settings.KMEANS_TOL.

    Returns:
        The clustering result.

    Raises:
        ValueError: If init is empty or not of shape (k, 2).
        TooManyClustersError: If k exceeds the number of points.
        DuplicateCentroidError: If two initial centroids coincide.
    """
    if max_iter is None:
        max_iter = settings.KMEANS_MAX_ITER
    if tol is None:
        tol = settings.KMEANS_TOL

    initial = np.array(init, dtype=np.float64)
    if initial.ndim != 2 or initial.shape[1] != 2 or initial.shape[0] == 0:
        msg = f"Initial centroids must have shape (k, 2) with k >= 1, got {initial.shape}"
        raise ValueError(msg)
    k = initial.shape[0]
    if k > len(points):
        msg = f"Cannot form {k} clusters from {len(points)} points"
        raise TooManyClustersError(msg)
    if np.unique(initial, axis=0).shape[0] != k:
        msg = "Initial centroids must be pairwise distinct"
        raise DuplicateCentroidError(msg)

    coords = points.coords
    centroids = initial.copy()
    labels, sq_dist = _assign(coords, centroids)
    history = [float(sq_dist.sum())]
    iterations = 0

    for iteration in range(1, max_iter + 1):
        updated = _update(coords, labels, sq_dist, centroids)
        shift = float(np.max(np.linalg.norm(updated - centroids, axis=1)))
        centroids = updated
        labels, sq_dist = _assign(coords, centroids)
        history.append(float(sq_dist.sum()))
        iterations = iteration
        logger.debug("K-Means iteration %d: inertia=%.6g shift=%.3g", iteration, history[-1], shift)
        if shift < tol:
            break
    else:
        logger.warning("K-Means stopped after max_iter=%d iterations without converging", max_iter)

    weights = np.bincount(labels, minlength=k) / len(points)
    logger.info("K-Means with k=%d finished after %d iteration(s), inertia=%.6g", k, iterations, history[-1])
    return KMeansResult(
        centroids=centroids,
        assignments=labels,
        inertia=history[-1],
        iterations=iterations,
        initial_centroids=initial,
        inertia_history=history,
        weights=weights,
    )


def seed_and_cluster(
    points: PointSet,
    peaks: PeakSet,
    max_iter: int | None = None,
    tol: float | None = None,
) -> KMeansResult:
    """Run K-Means with k and the initial centroids taken from detected peaks.

    Raises:
        NoClustersDetectedError: If the peak set is empty.
    """
    if peaks.k == 0:
        msg = "no clusters detected: the peak set is empty"
        raise NoClustersDetectedError(msg)
    return kmeans(points, peaks.centroids(), max_iter=max_iter, tol=tol)
