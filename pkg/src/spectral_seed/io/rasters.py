"""Raster exporters for external plotting.

Both formats lay the field out as an image: the CSV writes one line per y index
(lowest y first) holding the values for increasing x, the binary PGM puts the
largest y in its first row so the image appears the right way up.
"""

from typing import TYPE_CHECKING

import numpy as np

from spectral_seed.io.registry import RasterExporterRegistry
from spectral_seed.spectral import normalize_values

if TYPE_CHECKING:
    from pathlib import Path

    from spectral_seed.spectral import SmoothedField


@RasterExporterRegistry.register("csv")
def export_csv(field: SmoothedField, path: Path) -> None:
    """Write the raw values as comma-separated text with round-trip precision."""
    np.savetxt(path, field.values.T, delimiter=",", fmt="%.17g")


@RasterExporterRegistry.register("pgm")
def export_pgm(field: SmoothedField, path: Path) -> None:
    """Write an 8-bit binary PGM (P5) image, scaling [0, 1] to [0, 255]."""
    values = field.values if field.normalized else normalize_values(field.values)
    pixels = np.round(np.clip(values, 0.0, 1.0) * 255.0).astype(np.uint8)
    n_x, n_y = field.grid.shape
    with path.open("wb") as f:
        f.write(f"P5\n{n_x} {n_y}\n255\n".encode("ascii"))
        f.write(np.ascontiguousarray(pixels.T[::-1]).tobytes())


def export_raster(field: SmoothedField, path: Path, fmt: str) -> None:
    """Export a field with the exporter registered for ``fmt``.

    Raises:
        UnknownExporterError: If the format is not registered.
    """
    RasterExporterRegistry.get(fmt)(field, path)
