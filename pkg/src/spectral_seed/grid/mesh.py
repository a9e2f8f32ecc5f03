"""Mapping scattered points onto an equidistant mesh.

The discrete Fourier transform needs uniformly sampled data, so the scattered
observations are first mapped to the nearest centre of a square-pixel mesh. The
mesh spacing comes from the observed coordinate gaps: both coordinate sets are
sorted, successive differences are taken, M of the positive differences are
averaged per axis and the smaller of the two means becomes the spacing of both
axes.

Rasterizing turns the Dirac mixture into a Kronecker raster: every pixel that
receives at least one point is set to one, all other pixels stay zero. Points
sharing a pixel collapse into one.

Example usage:
    points = PointSet.from_pairs([(0.1, 0.2), (0.4, 0.9), (0.7, 0.3)])
    dx = estimate_spacing(points, gap_fraction=0.5)
    grid = build_grid(points, dx, cap=1024)
    field = rasterize(points, grid)
"""

import logging
import math

import numpy as np

from spectral_seed.conf import settings
from spectral_seed.grid.base import (
    MIN_AXIS_PIXELS,
    DegenerateAxisError,
    DensityField,
    GapOrder,
    GridContainmentError,
    GridSpec,
    InvalidPointSetError,
    Normalization,
    PointSet,
)

logger = logging.getLogger(__name__)

# Bound on the layout adjustment loops; each step only nudges n or dx slightly.
_MAX_LAYOUT_STEPS = 16


def _selected_gap_mean(values: np.ndarray, m: int, order: GapOrder, axis_name: str) -> float:
    """Mean of M positive gaps of one coordinate axis."""
    gaps = np.diff(np.sort(values))
    positive = gaps[gaps > 0]
    if positive.size == 0:
        msg = f"degenerate axis: all {axis_name} gaps are zero"
        raise DegenerateAxisError(msg)

    match order:
        case GapOrder.LARGEST:
            selected = np.sort(positive)[::-1][:m]
        case GapOrder.SMALLEST:
            selected = np.sort(positive)[:m]
        case GapOrder.LEADING:
            selected = positive[:m]
    return float(np.mean(selected))


def estimate_spacing(
    points: PointSet,
    gap_fraction: float | None = None,
    order: GapOrder | str | None = None,
) -> float:
    """Estimate the mesh spacing shared by both axes.

    M = max(1, floor(gap_fraction * N)) positive gaps are selected per axis
    (zero gaps from duplicate coordinates are dropped first) and the spacing is
    the smaller of the two means. When an axis has fewer than M positive gaps, all
    of them are used.

    Args:
        points: The scattered observations, N >= 2.
        gap_fraction: Fraction of N defining M, in (0, 1). Defaults to settings.GAP_FRACTION.
        order: Which gaps are selected. Defaults to settings.SPACING_GAP_ORDER.

    Returns:
        The spacing dx > 0.

    Raises:
        InvalidPointSetError: If fewer than two points are given.
        DegenerateAxisError: If all gaps of an axis are zero.
        ValueError: If gap_fraction is outside (0, 1).
    """
    if gap_fraction is None:
        gap_fraction = settings.GAP_FRACTION
    order = GapOrder(order if order is not None else settings.SPACING_GAP_ORDER)

    n = len(points)
    if n < 2:
        msg = f"Spacing estimation needs at least 2 points, got {n}"
        raise InvalidPointSetError(msg)
    if not 0.0 < gap_fraction < 1.0:
        msg = f"gap_fraction must lie in (0, 1), got {gap_fraction}"
        raise ValueError(msg)

    m = max(1, math.floor(gap_fraction * n))
    mean_x = _selected_gap_mean(points.x, m, order, "x")
    mean_y = _selected_gap_mean(points.y, m, order, "y")
    dx = min(mean_x, mean_y)
    logger.debug("Spacing from M=%d %s gaps: mean_x=%.6g mean_y=%.6g -> dx=%.6g", m, order, mean_x, mean_y, dx)
    return dx


def _axis_layout(lo: float, hi: float, dx: float, pad: float, min_size: int) -> tuple[int, float]:
    """Pixel count and origin of one axis, centring [lo, hi] in the mesh."""
    n = max(min_size, math.ceil((hi - lo + 2.0 * pad) / dx - 1e-9))
    centre = (lo + hi) / 2.0
    for _ in range(_MAX_LAYOUT_STEPS):
        origin = centre - (n - 1) / 2.0 * dx
        first = math.floor((lo - origin) / dx + 0.5)
        last = math.floor((hi - origin) / dx + 0.5)
        if first >= 0 and last <= n - 1:
            return n, origin
        n += 1
    msg = f"Could not lay out axis [{lo}, {hi}] with dx={dx}"
    raise GridContainmentError(msg)


def build_grid(
    points: PointSet,
    dx: float,
    cap: int | None = None,
    *,
    margin_px: int | None = None,
    margin_fraction: float | None = None,
    min_size: int | None = None,
) -> GridSpec:
    """Build a square-pixel mesh covering the points plus an empty margin.

    The point bounding box is centred in the mesh. Both axes get the same
    physical margin on each side, the larger of ``margin_px * dx`` and
    ``margin_fraction`` times the larger bounding-box side, so an axis spans
    n = max(min_size, ceil((span + 2 * margin) / dx)) pixels. The margin keeps the
    data off the outermost pixels, where no strict local maximum can lie.

    If an axis would need more than ``cap`` pixels, the spacing is increased to
    the smallest value meeting the cap; the effective spacing is the returned
    ``GridSpec.dx`` and the original one is kept in ``requested_dx``.

    Args:
        points: Observations that must all fall inside the mesh.
        dx: Requested spacing, > 0.
        cap: Maximum pixels per axis. Defaults to settings.GRID_CAP.
        margin_px: Minimum empty border in pixels. Defaults to settings.GRID_MARGIN_PX.
        margin_fraction: Empty border relative to the data span. Defaults to
            settings.GRID_MARGIN_FRACTION.
        min_size: Minimum pixels per axis. Defaults to settings.MIN_GRID_SIZE.

    Returns:
        The mesh geometry.

    Raises:
        ValueError: If dx is not positive, a margin is negative or the cap cannot
            hold the margin.
    """
    if cap is None:
        cap = settings.GRID_CAP
    if margin_px is None:
        margin_px = settings.GRID_MARGIN_PX
    if margin_fraction is None:
        margin_fraction = settings.GRID_MARGIN_FRACTION
    if min_size is None:
        min_size = settings.MIN_GRID_SIZE

    if not (math.isfinite(dx) and dx > 0):
        msg = f"Grid spacing must be positive and finite, got {dx}"
        raise ValueError(msg)
    if margin_px < 0 or margin_fraction < 0:
        msg = f"Margins must be non-negative, got margin_px={margin_px}, margin_fraction={margin_fraction}"
        raise ValueError(msg)
    if min_size < MIN_AXIS_PIXELS:
        msg = f"min_size must be at least {MIN_AXIS_PIXELS}, got {min_size}"
        raise ValueError(msg)
    if cap < min_size or cap <= 2 * margin_px + 1:
        msg = f"Grid cap {cap} is too small for min_size={min_size} and margin_px={margin_px}"
        raise ValueError(msg)

    x_lo, x_hi = float(points.x.min()), float(points.x.max())
    y_lo, y_hi = float(points.y.min()), float(points.y.max())
    span = max(x_hi - x_lo, y_hi - y_lo)

    requested_dx = dx
    if max(span * (1.0 + 2.0 * margin_fraction) / dx, span / dx + 2 * margin_px) > cap:
        dx = max(span * (1.0 + 2.0 * margin_fraction) / cap, span / (cap - 2 * margin_px))

    for _ in range(_MAX_LAYOUT_STEPS):
        pad = max(margin_px * dx, margin_fraction * span)
        n_x, origin_x = _axis_layout(x_lo, x_hi, dx, pad, min_size)
        n_y, origin_y = _axis_layout(y_lo, y_hi, dx, pad, min_size)
        if n_x <= cap and n_y <= cap:
            break
        dx *= 1.0 + 1e-9
    else:
        msg = f"Could not fit the points into a {cap}-pixel grid"
        raise GridContainmentError(msg)

    grid = GridSpec(
        dx=dx,
        origin_x=origin_x,
        origin_y=origin_y,
        n_x=n_x,
        n_y=n_y,
        requested_dx=requested_dx,
    )
    if grid.capped:
        logger.warning("Grid cap %d reached: spacing coarsened from %.6g to %.6g", cap, requested_dx, dx)
    logger.debug("Grid %dx%d, dx=%.6g, origin=(%.6g, %.6g)", n_x, n_y, dx, origin_x, origin_y)
    return grid


def rasterize(points: PointSet, grid: GridSpec) -> DensityField:
    """Map points to their nearest pixel centres and build the 0/1 raster.

    Nearest-pixel indices use round-half-up, so rasters are bit-reproducible.

    Args:
        points: Observations to rasterize.
        grid: Mesh produced by build_grid for these (or enclosing) points.

    Returns:
        The Kronecker raster with its occupied and collapsed counts.

    Raises:
        GridContainmentError: If any point maps outside the grid.
    """
    ix, iy = grid.pixel_indices(points.coords)
    outside = (ix < 0) | (ix >= grid.n_x) | (iy < 0) | (iy >= grid.n_y)
    if np.any(outside):
        first = int(np.flatnonzero(outside)[0])
        msg = f"{int(outside.sum())} point(s) fall outside the grid, first at {tuple(points.coords[first])}"
        raise GridContainmentError(msg)

    values = np.zeros(grid.shape, dtype=np.float64)
    values[ix, iy] = 1.0
    occupied = int(np.count_nonzero(values))

    field = DensityField(grid=grid, values=values, occupied_count=occupied, point_count=len(points))
    if field.collapsed_count:
        logger.info("Rasterized %d points onto %d pixels (%d collapsed)", len(points), occupied, field.collapsed_count)
    return field


def normalize_points(points: PointSet) -> tuple[PointSet, Normalization]:
    """Min-max normalize both predictors to [0, 1].

    Args:
        points: Observations in data units.

    Returns:
        The normalized points and the map needed to return to data units.

    Raises:
        DegenerateAxisError: If an axis has no spread.
    """
    lo = points.coords.min(axis=0)
    span = points.coords.max(axis=0) - lo
    if np.any(span <= 0):
        msg = "degenerate axis: cannot normalize a predictor with zero range"
        raise DegenerateAxisError(msg)
    normalization = Normalization(
        offset_x=float(lo[0]),
        offset_y=float(lo[1]),
        scale_x=float(span[0]),
        scale_y=float(span[1]),
    )
    return PointSet(normalization.apply(points.coords)), normalization
