"""Frequency-domain Gaussian smoothing of Kronecker rasters."""

from spectral_seed.spectral.base import (
    InvalidBandwidthError,
    NonRealInverseError,
    OracleTooLargeError,
    SmoothedField,
    Spectrum,
)
from spectral_seed.spectral.transform import (
    apply_gaussian_filter,
    forward_dft,
    gaussian_gain,
    inverse_dft,
    normalize_field,
    normalize_values,
    padded_shape,
    smooth,
    smooth_direct_oracle,
)

__all__ = [
    "InvalidBandwidthError",
    "NonRealInverseError",
    "OracleTooLargeError",
    "SmoothedField",
    "Spectrum",
    "apply_gaussian_filter",
    "forward_dft",
    "gaussian_gain",
    "inverse_dft",
    "normalize_field",
    "normalize_values",
    "padded_shape",
    "smooth",
    "smooth_direct_oracle",
]
