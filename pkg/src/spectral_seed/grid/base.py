"""Data types for the equidistant mesh and the Kronecker raster."""

import math
from dataclasses import dataclass, field, replace
from enum import StrEnum
from typing import TYPE_CHECKING

import numpy as np

from spectral_seed.exceptions import SpectralSeedError

if TYPE_CHECKING:
    from collections.abc import Iterable


class InvalidPointSetError(SpectralSeedError, ValueError):
    """Raised when points are empty, non-finite or not two-dimensional."""


class DegenerateAxisError(SpectralSeedError, ValueError):
    """Raised when an axis has no positive coordinate gap (or no spread)."""


class GridContainmentError(SpectralSeedError, ValueError):
    """Raised when a point falls outside the grid it is rasterized onto."""


MIN_AXIS_PIXELS = 8


class GapOrder(StrEnum):
    """Which positive coordinate gaps feed the spacing estimate.

    LARGEST averages the M widest gaps, SMALLEST the M narrowest, and LEADING the
    first M gaps in ascending coordinate order.
    """

    LARGEST = "largest"
    SMALLEST = "smallest"
    LEADING = "leading"


@dataclass(frozen=True, eq=False)
class PointSet:
    """Scattered 2-D observations in data units.

    Attributes:
        coords: Array of shape (N, 2) holding (x, y) rows, float64, read-only.
    """

    coords: np.ndarray

    def __post_init__(self) -> None:
        """Validate and freeze the coordinate array."""
        coords = np.array(self.coords, dtype=np.float64)
        if coords.ndim != 2 or coords.shape[1] != 2:
            msg = f"Points must have shape (N, 2), got {coords.shape}"
            raise InvalidPointSetError(msg)
        if coords.shape[0] == 0:
            msg = "A point set needs at least one point"
            raise InvalidPointSetError(msg)
        if not np.all(np.isfinite(coords)):
            msg = "All point coordinates must be finite"
            raise InvalidPointSetError(msg)
        coords.setflags(write=False)
        object.__setattr__(self, "coords", coords)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[float, float]]) -> PointSet:
        """Build a point set from an iterable of (x, y) pairs."""
        return cls(np.array(list(pairs), dtype=np.float64).reshape(-1, 2))

    @property
    def x(self) -> np.ndarray:
        """X coordinates."""
        return self.coords[:, 0]

    @property
    def y(self) -> np.ndarray:
        """Y coordinates."""
        return self.coords[:, 1]

    def __len__(self) -> int:
        """Return the number of points."""
        return int(self.coords.shape[0])

    def translated(self, shift_x: float, shift_y: float) -> PointSet:
        """Return a copy shifted by (shift_x, shift_y)."""
        return PointSet(self.coords + np.array([shift_x, shift_y]))


@dataclass(frozen=True)
class Normalization:
    """Per-axis min-max map from data units to the unit square.

    Attributes:
        offset_x: Minimum x of the original data.
        offset_y: Minimum y of the original data.
        scale_x: X range of the original data (max - min), > 0.
        scale_y: Y range of the original data (max - min), > 0.
    """

    offset_x: float
    offset_y: float
    scale_x: float
    scale_y: float

    def apply(self, coords: np.ndarray) -> np.ndarray:
        """Map (N, 2) coordinates from data units into [0, 1]^2."""
        return (np.asarray(coords, dtype=np.float64) - [self.offset_x, self.offset_y]) / [self.scale_x, self.scale_y]

    def invert(self, coords: np.ndarray) -> np.ndarray:
        """Map (N, 2) normalized coordinates back to data units."""
        return np.asarray(coords, dtype=np.float64) * [self.scale_x, self.scale_y] + [self.offset_x, self.offset_y]


@dataclass(frozen=True)
class GridSpec:
    """Geometry of the equidistant pixel mesh.

    Pixels are square (dy = dx). Pixel (ix, iy) is centred at
    ``(origin_x + ix * dx, origin_y + iy * dx)`` and covers half a spacing on each
    side, so the mesh spans ``L_x = n_x * dx`` by ``L_y = n_y * dx``.

    Attributes:
        dx: Effective spatial spacing of both axes.
        origin_x: X coordinate of the centre of pixel (0, 0).
        origin_y: Y coordinate of the centre of pixel (0, 0).
        n_x: Number of pixels along x.
        n_y: Number of pixels along y.
        requested_dx: Spacing asked for before the pixel cap was applied.
    """

    dx: float
    origin_x: float
    origin_y: float
    n_x: int
    n_y: int
    requested_dx: float | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        """Validate the geometry."""
        if not (math.isfinite(self.dx) and self.dx > 0):
            msg = f"Grid spacing must be positive and finite, got {self.dx}"
            raise ValueError(msg)
        if self.n_x < MIN_AXIS_PIXELS or self.n_y < MIN_AXIS_PIXELS:
            msg = f"Grid must have at least {MIN_AXIS_PIXELS} pixels per axis, got {self.n_x}x{self.n_y}"
            raise ValueError(msg)

    @property
    def L_x(self) -> float:  # noqa: N802
        """Extent along x."""
        return self.n_x * self.dx

    @property
    def L_y(self) -> float:  # noqa: N802
        """Extent along y."""
        return self.n_y * self.dx

    @property
    def extent(self) -> float:
        """Largest extent, the single L used by the bandwidth schedule."""
        return max(self.L_x, self.L_y)

    @property
    def shape(self) -> tuple[int, int]:
        """Array shape (n_x, n_y) of rasters on this grid."""
        return (self.n_x, self.n_y)

    @property
    def capped(self) -> bool:
        """Whether the spacing was coarsened to respect the pixel cap."""
        return self.requested_dx is not None and self.dx != self.requested_dx

    def with_shape(self, n_x: int, n_y: int) -> GridSpec:
        """Return the same mesh extended (or cut) at the far ends to n_x by n_y pixels."""
        return replace(self, n_x=n_x, n_y=n_y)

    def pixel_indices(self, coords: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Nearest-pixel indices of (N, 2) coordinates, rounding halves up.

        Indices are not clipped; callers check containment.
        """
        coords = np.asarray(coords, dtype=np.float64)
        ix = np.floor((coords[:, 0] - self.origin_x) / self.dx + 0.5).astype(np.int64)
        iy = np.floor((coords[:, 1] - self.origin_y) / self.dx + 0.5).astype(np.int64)
        return ix, iy

    def pixel_centers(self, ix: np.ndarray, iy: np.ndarray) -> np.ndarray:
        """Physical (N, 2) coordinates of the given pixel centres."""
        ix = np.asarray(ix, dtype=np.float64)
        iy = np.asarray(iy, dtype=np.float64)
        return np.column_stack((self.origin_x + ix * self.dx, self.origin_y + iy * self.dx))

    def axis_centers(self) -> tuple[np.ndarray, np.ndarray]:
        """Pixel-centre coordinates along x (length n_x) and y (length n_y)."""
        xs = self.origin_x + np.arange(self.n_x) * self.dx
        ys = self.origin_y + np.arange(self.n_y) * self.dx
        return xs, ys


@dataclass(frozen=True, eq=False)
class DensityField:
    """Binary Dirac-mixture raster: 1 where at least one point maps, 0 elsewhere.

    Attributes:
        grid: Geometry of the raster.
        values: Float array of shape (n_x, n_y) holding only 0.0 and 1.0.
        occupied_count: Number of pixels set to 1.
        point_count: Number of input points that were rasterized.
    """

    grid: GridSpec
    values: np.ndarray
    occupied_count: int
    point_count: int

    @property
    def collapsed_count(self) -> int:
        """Points lost because they shared a pixel with another point."""
        return self.point_count - self.occupied_count
