"""Local-maxima detection on the smoothed density."""

from spectral_seed.peaks.base import InvalidThresholdError, Peak, PeakSet, WindowTooCoarseError
from spectral_seed.peaks.detector import (
    choose_window_widths,
    critical_width,
    detect,
    find_peaks,
    locate_peaks,
    strict_local_maxima,
    threshold_field,
)
from spectral_seed.peaks.events import PeaksDetectedEvent

__all__ = [
    "InvalidThresholdError",
    "Peak",
    "PeakSet",
    "PeaksDetectedEvent",
    "WindowTooCoarseError",
    "choose_window_widths",
    "critical_width",
    "detect",
    "find_peaks",
    "locate_peaks",
    "strict_local_maxima",
    "threshold_field",
]
