"""Errors raised while reading and writing pipeline artifacts."""

from spectral_seed.exceptions import SpectralSeedError


class PointsFormatError(SpectralSeedError, ValueError):
    """Raised when a points CSV cannot be parsed into (x, y) rows."""


class UnknownExporterError(SpectralSeedError, KeyError):
    """Raised when a raster format has no registered exporter."""

    def __str__(self) -> str:
        """Return the message without KeyError's quoting."""
        return str(self.args[0]) if self.args else ""
