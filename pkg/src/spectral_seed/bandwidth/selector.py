"""Iterative bandwidth selection by correlation convergence.

The frequency-domain standard deviation grows linearly with the iteration
number, sigma_tilde_n = n / L, where L is the larger extent of the mesh. Small
sigma_tilde keeps only the lowest frequencies (heavy smoothing); every iteration
lets more detail through, so the smoothed field resembles the raster more and
their correlation rises. The search stops at the first n >= 2 where the
correlation changed by less than epsilon since the previous iteration and
returns that n-th field.

Example usage:
    smoothed, trace = select_bandwidth(field, epsilon=0.01)
    print(trace.converged_n, smoothed.sigma_tilde)
"""

import logging
from typing import TYPE_CHECKING

import numpy as np

from spectral_seed.bandwidth.base import (
    BandwidthConvergenceError,
    ConvergenceEntry,
    ConvergenceTrace,
    ZeroVarianceError,
)
from spectral_seed.bandwidth.events import BandwidthConvergedEvent, SmoothingPassEvent
from spectral_seed.conf import settings
from spectral_seed.spectral import normalize_field, smooth

if TYPE_CHECKING:
    from spectral_seed.events import EventBus
    from spectral_seed.grid import DensityField
    from spectral_seed.spectral import SmoothedField

logger = logging.getLogger(__name__)


def pearson_correlation(a: np.ndarray, b: np.ndarray) -> float:
    """Pearson product-moment correlation over all pixels of two arrays.

    Args:
        a: Real array.
        b: Real array of the same shape.

    Returns:
        The correlation, clipped to [-1, 1].

    Raises:
        ValueError: If the shapes differ.
        ZeroVarianceError: If either array is constant.
    """
    a = np.asarray(a, dtype=np.float64).ravel()
    b = np.asarray(b, dtype=np.float64).ravel()
    if a.shape != b.shape:
        msg = f"Correlation needs arrays of equal size, got {a.size} and {b.size}"
        raise ValueError(msg)
    if a.size == 0 or np.ptp(a) == 0 or np.ptp(b) == 0:
        msg = "zero variance: correlation is undefined for a constant array"
        raise ZeroVarianceError(msg)
    return float(np.clip(np.corrcoef(a, b)[0, 1], -1.0, 1.0))


def select_bandwidth(
    field: DensityField,
    epsilon: float | None = None,
    max_iter: int | None = None,
    *,
    event_bus: EventBus | None = None,
) -> tuple[SmoothedField, ConvergenceTrace]:
    """Smooth the raster with growing bandwidths until the correlation settles.

    Exactly ``trace.converged_n`` smoothing passes are run. The correlation uses the
    un-normalized smoothed field; the returned field is shift-normalized.

    Args:
        field: The Kronecker raster.
        epsilon: Convergence threshold, > 0. Defaults to settings.EPSILON.
        max_iter: Maximum number of iterations. Defaults to settings.MAX_ITER_BANDWIDTH.
        event_bus: Optional bus receiving SmoothingPassEvent and BandwidthConvergedEvent.

    Returns:
        The normalized smoothed field of the converged iteration and the trace.

    Raises:
        ValueError: If epsilon or max_iter is not positive.
        ZeroVarianceError: If the raster is constant (empty or fully occupied).
        BandwidthConvergenceError: If max_iter is reached without convergence.
    """
    if epsilon is None:
        epsilon = settings.EPSILON
    if max_iter is None:
        max_iter = settings.MAX_ITER_BANDWIDTH
    if not epsilon > 0:
        msg = f"epsilon must be positive, got {epsilon}"
        raise ValueError(msg)
    if max_iter < 1:
        msg = f"max_iter must be at least 1, got {max_iter}"
        raise ValueError(msg)

    extent = field.grid.extent
    trace = ConvergenceTrace(epsilon=epsilon)
    previous: float | None = None

    for n in range(1, max_iter + 1):
        sigma_tilde = n / extent
        smoothed = smooth(field, sigma_tilde, normalize=False)
        correlation = pearson_correlation(field.values, smoothed.values)
        delta = None if previous is None else abs(correlation - previous)

        trace.append(ConvergenceEntry(n=n, sigma_tilde=sigma_tilde, correlation=correlation, delta=delta))
        logger.debug("Bandwidth n=%d sigma_tilde=%.6g corr=%.6f delta=%s", n, sigma_tilde, correlation, delta)
        if event_bus is not None:
            event_bus.publish(SmoothingPassEvent(n=n, sigma_tilde=sigma_tilde, correlation=correlation, delta=delta))

        if delta is not None and delta < epsilon:
            trace.converged_n = n
            logger.info("Bandwidth converged after %d iterations (sigma_tilde=%.6g)", n, sigma_tilde)
            if event_bus is not None:
                event_bus.publish(BandwidthConvergedEvent(n=n, sigma_tilde=sigma_tilde, epsilon=epsilon))
            return normalize_field(smoothed), trace

        previous = correlation

    msg = f"Bandwidth selection did not converge within {max_iter} iterations (epsilon={epsilon})"
    raise BandwidthConvergenceError(msg, trace)
