"""Reading and writing points, rasters and JSON results."""

from spectral_seed.io.base import PointsFormatError, UnknownExporterError
from spectral_seed.io.points import read_points_csv, write_assignments_csv, write_points_csv
from spectral_seed.io.rasters import export_csv, export_pgm, export_raster
from spectral_seed.io.registry import RasterExporterRegistry
from spectral_seed.io.results import read_json, read_peaks_json, write_json

__all__ = [
    "PointsFormatError",
    "RasterExporterRegistry",
    "UnknownExporterError",
    "export_csv",
    "export_pgm",
    "export_raster",
    "read_json",
    "read_peaks_json",
    "read_points_csv",
    "write_assignments_csv",
    "write_json",
    "write_points_csv",
]
