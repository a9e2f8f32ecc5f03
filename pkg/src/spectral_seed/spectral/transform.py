"""Gaussian smoothing of the Kronecker raster in the frequency domain.

The smoothed density is obtained by transforming the raster, multiplying every
frequency bin (f_x, f_y) by the Gaussian gain

    1 / (2 pi s^2) * exp(-(f_x^2 + f_y^2) / (2 s^2))

with s the frequency-domain standard deviation (sigma_tilde), and transforming
back. By the convolution theorem this equals convolving the raster with a spatial
Gaussian of standard deviation 1 / (2 pi sigma_tilde), i.e. placing one Gaussian
on every occupied pixel. That direct summation is far slower and is kept only as
an oracle (smooth_direct_oracle) for checking the FFT path.

The DFT implements circular convolution. smooth therefore zero-pads the raster at
its far ends by FFT_PAD_SIGMAS spatial standard deviations per axis before
transforming and crops the result back to the mesh, so mass near one edge no
longer wraps around to the opposite edge. A pad of zero keeps the circular
behaviour.

Example usage:
    smoothed = smooth(field, sigma_tilde=4.0 / field.grid.extent)
    peak_pixel = np.unravel_index(np.argmax(smoothed.values), smoothed.values.shape)
"""

import logging
import math

import numpy as np
from scipy import fft as sp_fft

from spectral_seed.conf import settings
from spectral_seed.grid.base import DensityField, GridSpec
from spectral_seed.helpers import worker_count
from spectral_seed.spectral.base import (
    InvalidBandwidthError,
    NonRealInverseError,
    OracleTooLargeError,
    SmoothedField,
    Spectrum,
)

logger = logging.getLogger(__name__)

IMAGINARY_TOLERANCE = 1e-8
"""Largest imaginary residue of an inverse transform, relative to the largest real magnitude."""


def _check_sigma_tilde(sigma_tilde: float) -> None:
    if not (math.isfinite(sigma_tilde) and sigma_tilde > 0):
        msg = f"sigma_tilde must be positive and finite, got {sigma_tilde}"
        raise InvalidBandwidthError(msg)


def padded_shape(grid: GridSpec, sigma_tilde: float, pad_sigmas: float | None = None) -> tuple[int, int]:
    """Transform shape holding the mesh plus a zero border of pad_sigmas spatial deviations.

    The border is added at the far end of each axis and the size is rounded up to
    a length scipy.fft handles quickly.

    Args:
        grid: Mesh geometry.
        sigma_tilde: Frequency-domain standard deviation, > 0.
        pad_sigmas: Border width in spatial standard deviations. Defaults to
            settings.FFT_PAD_SIGMAS; 0 returns the mesh shape unchanged.

    Returns:
        (n_x, n_y) of the padded transform.

    Raises:
        InvalidBandwidthError: If sigma_tilde is not positive.
        ValueError: If pad_sigmas is negative.
    """
    _check_sigma_tilde(sigma_tilde)
    if pad_sigmas is None:
        pad_sigmas = settings.FFT_PAD_SIGMAS
    if not (math.isfinite(pad_sigmas) and pad_sigmas >= 0):
        msg = f"pad_sigmas must be non-negative and finite, got {pad_sigmas}"
        raise ValueError(msg)
    if pad_sigmas == 0:
        return grid.shape
    border = math.ceil(pad_sigmas / (2.0 * math.pi * sigma_tilde * grid.dx))
    return (sp_fft.next_fast_len(grid.n_x + border, real=True), sp_fft.next_fast_len(grid.n_y + border, real=True))


def forward_dft(field: DensityField, shape: tuple[int, int] | None = None) -> Spectrum:
    """Transform a raster into its spectrum.

    Uses the exp(-2 pi i (x f_x + y f_y)) sign convention with pixel (0, 0) as the
    spatial origin; no normalization is applied on the forward transform.

    Args:
        field: The Kronecker raster.
        shape: Transform shape, at least the raster shape. The raster is
            zero-padded at the far ends; the spectrum grid is extended to match.

    Returns:
        The complex spectrum, of the raster shape or of shape.
    """
    if shape is None or tuple(shape) == field.grid.shape:
        values = sp_fft.fft2(field.values, workers=worker_count())
        return Spectrum(values=values, grid=field.grid)
    if shape[0] < field.grid.n_x or shape[1] < field.grid.n_y:
        msg = f"Transform shape {shape} is smaller than the raster {field.grid.shape}"
        raise ValueError(msg)
    values = sp_fft.fft2(field.values, s=shape, workers=worker_count())
    return Spectrum(values=values, grid=field.grid.with_shape(*shape))


def gaussian_gain(grid: GridSpec, sigma_tilde: float, *, include_prefactor: bool = True) -> np.ndarray:
    """Per-bin gain of the frequency-domain Gaussian filter.

    Args:
        grid: Mesh geometry; bin frequencies are k / L with negative frequencies
            for the upper half of the indices.
        sigma_tilde: Frequency-domain standard deviation, > 0.
        include_prefactor: Whether to multiply by 1 / (2 pi sigma_tilde^2).

    Returns:
        Real array of shape (n_x, n_y).

    Raises:
        InvalidBandwidthError: If sigma_tilde is not positive.
    """
    _check_sigma_tilde(sigma_tilde)
    fx = sp_fft.fftfreq(grid.n_x, d=grid.dx)
    fy = sp_fft.fftfreq(grid.n_y, d=grid.dx)
    gain = np.exp(-(fx[:, np.newaxis] ** 2 + fy[np.newaxis, :] ** 2) / (2.0 * sigma_tilde**2))
    if include_prefactor:
        gain *= 1.0 / (2.0 * math.pi * sigma_tilde**2)
    return gain


def apply_gaussian_filter(spec: Spectrum, sigma_tilde: float, *, include_prefactor: bool = True) -> Spectrum:
    """Multiply a spectrum by the Gaussian filter.

    Args:
        spec: Spectrum of a raster.
        sigma_tilde: Frequency-domain standard deviation, > 0.
        include_prefactor: Whether to apply the 1 / (2 pi sigma_tilde^2) prefactor.
            It has no effect once the result is shift-normalized.

    Returns:
        The filtered spectrum.

    Raises:
        InvalidBandwidthError: If sigma_tilde is not positive.
    """
    gain = gaussian_gain(spec.grid, sigma_tilde, include_prefactor=include_prefactor)
    return Spectrum(values=spec.values * gain, grid=spec.grid)


def inverse_dft(spec: Spectrum) -> np.ndarray:
    """Transform a conjugate-symmetric spectrum back to a real field.

    Args:
        spec: Spectrum whose inverse is real up to round-off.

    Returns:
        Real array of shape (n_x, n_y).

    Raises:
        NonRealInverseError: If the imaginary residue exceeds 1e-8 times the largest
            real magnitude, which points at an indexing or filter bug.
    """
    result = sp_fft.ifft2(spec.values, workers=worker_count())
    real = np.ascontiguousarray(result.real)
    residue = float(np.max(np.abs(result.imag))) if result.size else 0.0
    scale = float(np.max(np.abs(real))) if real.size else 0.0
    if residue > IMAGINARY_TOLERANCE * scale:
        msg = f"non-real inverse: imaginary residue {residue:.3g} exceeds {IMAGINARY_TOLERANCE:g} x {scale:.3g}"
        raise NonRealInverseError(msg)
    return real


def normalize_values(values: np.ndarray) -> np.ndarray:
    """Shift a field to a zero minimum and scale it to a unit maximum.

    A constant field has nothing to normalize and maps to all zeros.

    Args:
        values: Real array.

    Returns:
        A new array with min 0 and max 1, or all zeros.
    """
    lo = float(np.min(values))
    span = float(np.max(values)) - lo
    if span == 0.0:
        return np.zeros_like(values, dtype=np.float64)
    return (values - lo) / span


def normalize_field(field: SmoothedField) -> SmoothedField:
    """Return the shift-normalized version of a smoothed field (idempotent)."""
    if field.normalized:
        return field
    return SmoothedField(
        grid=field.grid,
        values=normalize_values(field.values),
        sigma_tilde=field.sigma_tilde,
        normalized=True,
    )


def smooth(
    field: DensityField,
    sigma_tilde: float,
    *,
    normalize: bool = True,
    include_prefactor: bool = True,
    pad_sigmas: float | None = None,
) -> SmoothedField:
    """Smooth a raster with the FFT -> Gaussian filter -> inverse FFT path.

    Args:
        field: The Kronecker raster.
        sigma_tilde: Frequency-domain standard deviation, > 0.
        normalize: Whether to shift-normalize the result to [0, 1].
        include_prefactor: Whether to apply the filter prefactor.
        pad_sigmas: Zero border, in spatial standard deviations, added before
            transforming. Defaults to settings.FFT_PAD_SIGMAS; 0 gives the
            circular convolution of the bare mesh.

    Returns:
        The smoothed field.

    Raises:
        InvalidBandwidthError: If sigma_tilde is not positive.
        NonRealInverseError: If the inverse transform is not real.
        ValueError: If pad_sigmas is negative.
    """
    shape = padded_shape(field.grid, sigma_tilde, pad_sigmas)
    filtered = apply_gaussian_filter(forward_dft(field, shape), sigma_tilde, include_prefactor=include_prefactor)
    n_x, n_y = field.grid.shape
    smoothed = SmoothedField(
        grid=field.grid,
        values=np.ascontiguousarray(inverse_dft(filtered)[:n_x, :n_y]),
        sigma_tilde=sigma_tilde,
        normalized=False,
    )
    return normalize_field(smoothed) if normalize else smoothed


def smooth_direct_oracle(
    field: DensityField,
    sigma_tilde: float,
    *,
    normalize: bool = True,
    max_occupied: int | None = None,
) -> SmoothedField:
    """Smooth a raster by summing one spatial Gaussian per occupied pixel.

    Evaluates sum_i exp(-2 pi^2 sigma_tilde^2 [(x - x_i)^2 + (y - y_i)^2]) at every
    pixel centre. The Gaussian is separable, so the sum is computed as the product
    of two (occupied x pixels) factor matrices. Cost grows with
    occupied x pixels; meant for tests and the oracle-check command.

    Args:
        field: The Kronecker raster.
        sigma_tilde: Frequency-domain standard deviation, > 0.
        normalize: Whether to shift-normalize the result to [0, 1].
        max_occupied: Largest accepted occupied count. Defaults to settings.ORACLE_MAX_OCCUPIED.

    Returns:
        The smoothed field; an empty raster gives all zeros.

    Raises:
        InvalidBandwidthError: If sigma_tilde is not positive.
        OracleTooLargeError: If the raster has more occupied pixels than allowed.
    """
    _check_sigma_tilde(sigma_tilde)
    if max_occupied is None:
        max_occupied = settings.ORACLE_MAX_OCCUPIED
    if field.occupied_count > max_occupied:
        msg = f"Direct summation limited to {max_occupied} occupied pixels, got {field.occupied_count}"
        raise OracleTooLargeError(msg)

    xs, ys = field.grid.axis_centers()
    ix, iy = np.nonzero(field.values)
    rate = 2.0 * math.pi**2 * sigma_tilde**2
    factor_x = np.exp(-rate * (xs[np.newaxis, :] - xs[ix][:, np.newaxis]) ** 2)
    factor_y = np.exp(-rate * (ys[np.newaxis, :] - ys[iy][:, np.newaxis]) ** 2)
    values = factor_x.T @ factor_y

    smoothed = SmoothedField(grid=field.grid, values=values, sigma_tilde=sigma_tilde, normalized=False)
    return normalize_field(smoothed) if normalize else smoothed
