"""Data types and errors for peak detection."""

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from spectral_seed.exceptions import SpectralSeedError


class WindowTooCoarseError(SpectralSeedError, ValueError):
    """Raised when the critical width spans fewer than five pixels."""


class InvalidThresholdError(SpectralSeedError, ValueError):
    """Raised when the invalid-maxima threshold lies outside [0, 1)."""


@dataclass(frozen=True)
class Peak:
    """A detected local maximum of the smoothed density.

    Attributes:
        ix: Pixel index along x.
        iy: Pixel index along y.
        x: X coordinate of the pixel centre.
        y: Y coordinate of the pixel centre.
        value: Normalized smoothed density at the pixel, in (0, 1].
    """

    ix: int
    iy: int
    x: float
    y: float
    value: float

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON-serializable dictionary."""
        return {"x": self.x, "y": self.y, "value": self.value, "ix": self.ix, "iy": self.iy}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Peak:
        """Create a peak from a dictionary written by to_dict.

        Pixel indices are optional so hand-written centroid files can be used; they
        default to -1.
        """
        return cls(
            ix=int(data.get("ix", -1)),
            iy=int(data.get("iy", -1)),
            x=float(data["x"]),
            y=float(data["y"]),
            value=float(data.get("value", 1.0)),
        )


@dataclass(frozen=True)
class PeakSet:
    """Centroid estimates produced by the peak detector.

    Attributes:
        peaks: Detected peaks, unique by pixel and sorted by (ix, iy).
        window_widths_px: The three segment widths used, in pixels.
        threshold: Density floor applied before the search.
        sigma_tilde: Bandwidth of the field the peaks were found on, if known.
    """

    peaks: tuple[Peak, ...] = field(default_factory=tuple)
    window_widths_px: tuple[int, ...] = ()
    threshold: float = 0.0
    sigma_tilde: float | None = None

    def __len__(self) -> int:
        """Return the number of peaks."""
        return len(self.peaks)

    @property
    def k(self) -> int:
        """Number of detected clusters."""
        return len(self.peaks)

    def centroids(self) -> np.ndarray:
        """Peak coordinates as a (k, 2) array."""
        return np.array([(p.x, p.y) for p in self.peaks], dtype=np.float64).reshape(-1, 2)

    def to_dict(self) -> dict[str, Any]:
        """Serialize to {k, peaks, sigma_tilde, window_widths_px, threshold}."""
        return {
            "k": self.k,
            "peaks": [p.to_dict() for p in self.peaks],
            "sigma_tilde": self.sigma_tilde,
            "window_widths_px": list(self.window_widths_px),
            "threshold": self.threshold,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> PeakSet:
        """Create a peak set from a dictionary written by to_dict."""
        sigma_tilde = data.get("sigma_tilde")
        return cls(
            peaks=tuple(Peak.from_dict(p) for p in data.get("peaks", [])),
            window_widths_px=tuple(int(w) for w in data.get("window_widths_px", [])),
            threshold=float(data.get("threshold", 0.0)),
            sigma_tilde=float(sigma_tilde) if sigma_tilde is not None else None,
        )
