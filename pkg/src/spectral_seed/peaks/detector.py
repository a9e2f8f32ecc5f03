"""Local-maxima search on the smoothed density.

Two Gaussians of equal height and standard deviation sigma keep separate maxima
only while their centres are at least 2 sigma apart. With the spatial standard
deviation 1 / (2 pi sigma_tilde) this gives the critical width
w_c = 1 / (pi sigma_tilde): windows no wider than w_c never hold two genuine
maxima.

The search zeroes densities below a threshold, tiles the mesh into
non-overlapping square segments and takes the argmax of every segment. An
argmax lying on a segment edge is only the top of a slope reaching into the
segment, so it is rejected; an interior argmax that also beats all eight of its
neighbours is a local maximum. One tiling misses maxima that happen to sit on
segment edges, so the search is repeated with three consecutive widths
(W, W - 1, W - 2) and a maximum counts once each of its two indices is
segment-interior in some tiling. An index is an edge in all three tilings only
on a sparse lattice.

Example usage:
    peaks, trace = detect(field, epsilon=0.01, tau=0.1)
    for peak in peaks.peaks:
        print(peak.x, peak.y, peak.value)
"""

import logging
import math
from typing import TYPE_CHECKING

import numpy as np
from scipy import ndimage

from spectral_seed.bandwidth import select_bandwidth
from spectral_seed.conf import settings
from spectral_seed.peaks.base import InvalidThresholdError, Peak, PeakSet, WindowTooCoarseError
from spectral_seed.peaks.events import PeaksDetectedEvent
from spectral_seed.spectral import InvalidBandwidthError, SmoothedField

if TYPE_CHECKING:
    from collections.abc import Sequence

    from spectral_seed.bandwidth import ConvergenceTrace
    from spectral_seed.events import EventBus
    from spectral_seed.grid import DensityField

logger = logging.getLogger(__name__)

MIN_WINDOW_PX = 5

# 3x3 neighbourhood without its centre
_NEIGHBOURS = np.array([[1, 1, 1], [1, 0, 1], [1, 1, 1]], dtype=bool)


def critical_width(sigma_tilde: float) -> float:
    """Return w_c = 1 / (pi * sigma_tilde), twice the spatial standard deviation.

    Raises:
        InvalidBandwidthError: If sigma_tilde is not positive.
    """
    if not (math.isfinite(sigma_tilde) and sigma_tilde > 0):
        msg = f"sigma_tilde must be positive and finite, got {sigma_tilde}"
        raise InvalidBandwidthError(msg)
    return 1.0 / (math.pi * sigma_tilde)


def choose_window_widths(w_c: float, dx: float) -> tuple[int, int, int]:
    """Pick three consecutive segment widths, in pixels, no wider than w_c.

    Args:
        w_c: Critical width in data units.
        dx: Mesh spacing in data units.

    Returns:
        (W, W - 1, W - 2) with W = floor(w_c / dx).

    Raises:
        WindowTooCoarseError: If W < 5.
    """
    widest = math.floor(w_c / dx + 1e-9)
    if widest < MIN_WINDOW_PX:
        msg = (
            f"bandwidth too coarse for grid: critical width {w_c:.6g} spans {widest} pixel(s) "
            f"of {dx:.6g}, need at least {MIN_WINDOW_PX}"
        )
        raise WindowTooCoarseError(msg)
    return (widest, widest - 1, widest - 2)


def _check_tau(tau: float) -> None:
    if not 0.0 <= tau < 1.0:
        msg = f"Peak threshold must lie in [0, 1), got {tau}"
        raise InvalidThresholdError(msg)


def threshold_field(field: SmoothedField, tau: float | None = None) -> SmoothedField:
    """Zero every value below tau.

    Args:
        field: Normalized smoothed field.
        tau: Density floor in [0, 1). Defaults to settings.PEAK_THRESHOLD.

    Returns:
        A new field; values >= tau are unchanged.

    Raises:
        InvalidThresholdError: If tau lies outside [0, 1).
        ValueError: If the field is not normalized.
    """
    if tau is None:
        tau = settings.PEAK_THRESHOLD
    _check_tau(tau)
    if not field.normalized:
        msg = "threshold_field expects a shift-normalized field"
        raise ValueError(msg)
    values = np.where(field.values < tau, 0.0, field.values)
    return SmoothedField(grid=field.grid, values=values, sigma_tilde=field.sigma_tilde, normalized=True)


def strict_local_maxima(values: np.ndarray) -> np.ndarray:
    """Mask of pixels strictly greater than all eight neighbours.

    Pixels on the outer boundary of the array never qualify.

    Args:
        values: Real 2-D array.

    Returns:
        Boolean array of the same shape.
    """
    values = np.asarray(values, dtype=np.float64)
    neighbour_max = ndimage.maximum_filter(values, footprint=_NEIGHBOURS, mode="constant", cval=-np.inf)
    mask = values > neighbour_max
    mask[0, :] = mask[-1, :] = False
    mask[:, 0] = mask[:, -1] = False
    return mask


def _segment_maxima(values: np.ndarray, strict: np.ndarray, width: int) -> dict[tuple[int, int], tuple[bool, bool]]:
    """Positive strict-maximum argmax pixels of one tiling.

    Each pixel maps to whether its row and its column index lie inside the
    segment rather than on the segment's edge.
    """
    n_x, n_y = values.shape
    found: dict[tuple[int, int], tuple[bool, bool]] = {}
    for x0 in range(0, n_x, width):
        for y0 in range(0, n_y, width):
            segment = values[x0 : x0 + width, y0 : y0 + width]
            # First occurrence in row-major order on ties
            lx, ly = np.unravel_index(int(np.argmax(segment)), segment.shape)
            if segment[lx, ly] <= 0.0:
                continue
            ix, iy = x0 + int(lx), y0 + int(ly)
            if strict[ix, iy]:
                found[ix, iy] = (0 < lx < segment.shape[0] - 1, 0 < ly < segment.shape[1] - 1)
    return found


def _enforce_separation(peaks: list[Peak], min_separation: float) -> list[Peak]:
    """Greedily keep the highest peaks so that no two are closer than min_separation."""
    kept: list[Peak] = []
    for peak in sorted(peaks, key=lambda p: (-p.value, p.ix, p.iy)):
        if all(math.hypot(peak.x - other.x, peak.y - other.y) >= min_separation for other in kept):
            kept.append(peak)
        else:
            logger.debug("Dropping peak (%d, %d): closer than %.6g to a higher peak", peak.ix, peak.iy, min_separation)
    return sorted(kept, key=lambda p: (p.ix, p.iy))


def find_peaks(
    field: SmoothedField,
    widths_px: Sequence[int],
    *,
    threshold: float = 0.0,
    min_separation: float | None = None,
) -> PeakSet:
    """Collect segment-interior strict local maxima over several tilings.

    For every width the mesh is tiled into non-overlapping segments, partial
    segments at the far edges included. A segment's argmax is a candidate when its
    value is positive and it is a strict 8-neighbour maximum. A candidate is
    accepted once its row index lies inside its segment in at least one tiling and
    its column index lies inside its segment in at least one tiling; the tilings
    need not be the same. Accepted pixels are merged by pixel index.

    Args:
        field: Thresholded, normalized smoothed field.
        widths_px: Segment widths in pixels.
        threshold: Threshold that was applied to the field, recorded in the result.
        min_separation: If given, of two peaks closer than this (data units) only
            the higher is kept, ties going to the smaller (ix, iy).

    Returns:
        The peaks sorted by (ix, iy); possibly empty.
    """
    values = field.values
    strict = strict_local_maxima(values)

    # (row interior somewhere, column interior somewhere) per candidate pixel
    coverage: dict[tuple[int, int], tuple[bool, bool]] = {}
    for width in widths_px:
        if width < 1:
            msg = f"Segment widths must be positive, got {width}"
            raise ValueError(msg)
        found = _segment_maxima(values, strict, int(width))
        logger.debug("Tiling of width %d px found %d argmax maxima", width, len(found))
        for pixel, (row_inside, col_inside) in found.items():
            seen_row, seen_col = coverage.get(pixel, (False, False))
            coverage[pixel] = (seen_row or row_inside, seen_col or col_inside)

    ordered = sorted(pixel for pixel, (row_inside, col_inside) in coverage.items() if row_inside and col_inside)
    centers = field.grid.pixel_centers([ix for ix, _ in ordered], [iy for _, iy in ordered])
    peaks = [
        Peak(ix=ix, iy=iy, x=float(cx), y=float(cy), value=float(values[ix, iy]))
        for (ix, iy), (cx, cy) in zip(ordered, centers, strict=True)
    ]
    if min_separation is not None:
        peaks = _enforce_separation(peaks, min_separation)

    return PeakSet(
        peaks=tuple(peaks),
        window_widths_px=tuple(int(w) for w in widths_px),
        threshold=threshold,
        sigma_tilde=field.sigma_tilde,
    )


def locate_peaks(
    smoothed: SmoothedField,
    tau: float | None = None,
    *,
    event_bus: EventBus | None = None,
) -> PeakSet:
    """Threshold a converged field and search it with widths derived from its bandwidth.

    Args:
        smoothed: Normalized smoothed field, typically from select_bandwidth.
        tau: Density floor in [0, 1). Defaults to settings.PEAK_THRESHOLD.
        event_bus: Optional bus receiving a PeaksDetectedEvent.

    Returns:
        The detected peaks; pairs closer than w_c / 2 are reduced to the higher one.

    Raises:
        InvalidThresholdError: If tau lies outside [0, 1).
        WindowTooCoarseError: If the critical width spans fewer than five pixels.
    """
    if tau is None:
        tau = settings.PEAK_THRESHOLD
    thresholded = threshold_field(smoothed, tau)
    w_c = critical_width(smoothed.sigma_tilde)
    widths = choose_window_widths(w_c, smoothed.grid.dx)
    peaks = find_peaks(thresholded, widths, threshold=tau, min_separation=w_c / 2.0)

    logger.info("Detected %d peak(s) with window widths %s px (w_c=%.6g)", peaks.k, widths, w_c)
    if event_bus is not None:
        event_bus.publish(PeaksDetectedEvent(k=peaks.k, sigma_tilde=smoothed.sigma_tilde, window_widths_px=widths))
    return peaks


def detect(
    field: DensityField,
    epsilon: float | None = None,
    tau: float | None = None,
    *,
    max_iter: int | None = None,
    event_bus: EventBus | None = None,
) -> tuple[PeakSet, ConvergenceTrace]:
    """Select the bandwidth and detect the peaks of a raster.

    Args:
        field: The Kronecker raster.
        epsilon: Convergence threshold. Defaults to settings.EPSILON.
        tau: Density floor. Defaults to settings.PEAK_THRESHOLD.
        max_iter: Bandwidth iteration guard. Defaults to settings.MAX_ITER_BANDWIDTH.
        event_bus: Optional bus receiving bandwidth and peak events.

    Returns:
        The peaks and the convergence trace.
    """
    smoothed, trace = select_bandwidth(field, epsilon, max_iter, event_bus=event_bus)
    return locate_peaks(smoothed, tau, event_bus=event_bus), trace
