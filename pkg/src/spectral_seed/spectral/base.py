"""Data types for the frequency-domain smoothing stage."""

import math
from dataclasses import dataclass

import numpy as np

from spectral_seed.exceptions import SpectralSeedError
from spectral_seed.grid.base import GridSpec


class InvalidBandwidthError(SpectralSeedError, ValueError):
    """Raised when a frequency-domain standard deviation is not positive."""


class NonRealInverseError(SpectralSeedError, ArithmeticError):
    """Raised when an inverse transform leaves a significant imaginary part."""


class OracleTooLargeError(SpectralSeedError, ValueError):
    """Raised when the direct-summation oracle is asked to handle too many points."""


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Complex 2-D spectrum of a raster.

    Bin (kx, ky) corresponds to the physical frequency (kx / L_x, ky / L_y) for
    indices below half the axis length and (kx - n_x) / L_x (resp. y) above.

    Attributes:
        values: Complex array of shape (n_x, n_y).
        grid: Geometry of the raster the spectrum was computed from.
    """

    values: np.ndarray
    grid: GridSpec


@dataclass(frozen=True, eq=False)
class SmoothedField:
    """Real smoothed density on the mesh.

    Attributes:
        grid: Geometry of the field.
        values: Real array of shape (n_x, n_y).
        sigma_tilde: Frequency-domain standard deviation of the Gaussian filter (1 / data units).
        normalized: Whether values were shifted to a zero minimum and scaled to a unit maximum.
    """

    grid: GridSpec
    values: np.ndarray
    sigma_tilde: float
    normalized: bool

    @property
    def sigma_spatial(self) -> float:
        """Spatial standard deviation 1 / (2 pi sigma_tilde) of the equivalent kernel."""
        return 1.0 / (2.0 * math.pi * self.sigma_tilde)
