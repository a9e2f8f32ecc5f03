"""Bandwidth selection for the Gaussian smoothing filter."""

from spectral_seed.bandwidth.base import (
    BandwidthConvergenceError,
    ConvergenceEntry,
    ConvergenceTrace,
    ZeroVarianceError,
)
from spectral_seed.bandwidth.events import BandwidthConvergedEvent, SmoothingPassEvent
from spectral_seed.bandwidth.selector import pearson_correlation, select_bandwidth

__all__ = [
    "BandwidthConvergedEvent",
    "BandwidthConvergenceError",
    "ConvergenceEntry",
    "ConvergenceTrace",
    "SmoothingPassEvent",
    "ZeroVarianceError",
    "pearson_correlation",
    "select_bandwidth",
]
