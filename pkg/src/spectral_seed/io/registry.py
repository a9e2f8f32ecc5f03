"""Registry of raster exporters.

Exporters register themselves under a format name with the
@RasterExporterRegistry.register decorator, so the command-line front-end can
offer every registered format without hardcoding them.

Example:
    Registering a custom exporter::

        @RasterExporterRegistry.register("npy")
        def export_npy(field: SmoothedField, path: Path) -> None:
            np.save(path, field.values)

    Exporting through the registry::

        RasterExporterRegistry.get("npy")(smoothed, Path("density.npy"))
"""

import logging
from typing import TYPE_CHECKING, ClassVar

from spectral_seed.io.base import UnknownExporterError

if TYPE_CHECKING:
    from collections.abc import Callable
    from pathlib import Path

    from spectral_seed.spectral import SmoothedField

    RasterExporter = Callable[[SmoothedField, Path], None]

logger = logging.getLogger(__name__)


class RasterExporterRegistry:
    """Central registry mapping raster format names to exporter functions.

    Class Attributes:
        _exporters: Dictionary mapping format names to exporters.
    """

    _exporters: ClassVar[dict[str, RasterExporter]] = {}

    @classmethod
    def register(cls, name: str) -> Callable[[RasterExporter], RasterExporter]:
        """Decorator to register an exporter under a format name.

        Registering a name twice replaces the earlier exporter.

        Args:
            name: Format name used on the command line (e.g. "pgm").

        Returns:
            Decorator that registers and returns the exporter unchanged.
        """

        def decorator(exporter: RasterExporter) -> RasterExporter:
            if name in cls._exporters:
                logger.debug("Replacing raster exporter: %s", name)
            cls._exporters[name] = exporter
            logger.debug("Registered raster exporter: %s", name)
            return exporter

        return decorator

    @classmethod
    def get(cls, name: str) -> RasterExporter:
        """Return the exporter registered under ``name``.

        Raises:
            UnknownExporterError: If nothing is registered under the name.
        """
        try:
            return cls._exporters[name]
        except KeyError:
            msg = f"Unknown raster format {name!r}; available: {', '.join(cls.get_all_names())}"
            raise UnknownExporterError(msg) from None

    @classmethod
    def get_all_names(cls) -> list[str]:
        """Get all registered format names, sorted."""
        return sorted(cls._exporters)

    @classmethod
    def is_registered(cls, name: str) -> bool:
        """Check whether a format name is registered."""
        return name in cls._exporters

    @classmethod
    def unregister(cls, name: str) -> None:
        """Remove a format; unknown names are ignored."""
        cls._exporters.pop(name, None)
