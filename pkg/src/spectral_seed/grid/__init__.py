"""Equidistant mesh generation and Kronecker rasterization of 2-D points."""

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
from spectral_seed.grid.mesh import build_grid, estimate_spacing, normalize_points, rasterize

__all__ = [
    "MIN_AXIS_PIXELS",
    "DegenerateAxisError",
    "DensityField",
    "GapOrder",
    "GridContainmentError",
    "GridSpec",
    "InvalidPointSetError",
    "Normalization",
    "PointSet",
    "build_grid",
    "estimate_spacing",
    "normalize_points",
    "rasterize",
]
