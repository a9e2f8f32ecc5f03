"""End-to-end centroid estimation.

CentroidPipeline chains the stages: optional min-max normalization, mesh
spacing, grid, Kronecker raster, bandwidth selection, peak search and, on
request, K-Means seeded with the peaks. Parameters come from a RunConfig and
progress is reported on an optional EventBus.

Example usage:
    pipeline = CentroidPipeline(RunConfig.from_settings(epsilon=0.005))
    detection = pipeline.detect(points)
    result = pipeline.cluster(points, detection.peaks)
"""

import logging
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING

from spectral_seed.bandwidth import select_bandwidth
from spectral_seed.conf import RunConfig
from spectral_seed.grid import build_grid, estimate_spacing, normalize_points, rasterize
from spectral_seed.peaks import PeakSet, locate_peaks
from spectral_seed.seeding import seed_and_cluster

if TYPE_CHECKING:
    from spectral_seed.bandwidth import ConvergenceTrace
    from spectral_seed.events import EventBus
    from spectral_seed.grid import DensityField, Normalization, PointSet
    from spectral_seed.seeding import KMeansResult
    from spectral_seed.spectral import SmoothedField

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Detection:
    """Everything a detection run produced.

    Attributes:
        field: The Kronecker raster (in normalized units when normalization is on).
        smoothed: The normalized smoothed field at the selected bandwidth.
        peaks: Detected peaks; x and y are in data units.
        trace: Bandwidth convergence trace.
        normalization: The min-max map applied before meshing, if any.
    """

    field: DensityField
    smoothed: SmoothedField
    peaks: PeakSet
    trace: ConvergenceTrace
    normalization: Normalization | None = None


class CentroidPipeline:
    """Runs the detection stages with one configuration.

    Attributes:
        config: Effective run configuration.
        event_bus: Bus receiving stage events, or None.
    """

    def __init__(self, config: RunConfig | None = None, event_bus: EventBus | None = None) -> None:
        """Initialize the pipeline.

        Args:
            config: Run configuration. Defaults to RunConfig.from_settings().
            event_bus: Optional bus for SmoothingPassEvent, BandwidthConvergedEvent
                and PeaksDetectedEvent.
        """
        self.config = config if config is not None else RunConfig.from_settings()
        self.event_bus = event_bus

    def prepare(self, points: PointSet) -> tuple[PointSet, Normalization | None]:
        """Apply min-max normalization when the configuration asks for it."""
        if not self.config.normalize:
            return points, None
        normalized, normalization = normalize_points(points)
        logger.debug("Normalized points with %s", normalization)
        return normalized, normalization

    def build_field(self, points: PointSet) -> DensityField:
        """Estimate the spacing (unless fixed), lay out the grid and rasterize.

        Args:
            points: Points in the units the mesh is built in.

        Returns:
            The Kronecker raster.
        """
        config = self.config
        dx = config.dx
        if dx is None:
            dx = estimate_spacing(points, config.gap_fraction, config.gap_order)
        grid = build_grid(
            points,
            dx,
            config.grid_cap,
            margin_px=config.margin_px,
            margin_fraction=config.margin_fraction,
        )
        field = rasterize(points, grid)
        logger.info(
            "Grid %dx%d with dx=%.6g: %d occupied pixels, %d collapsed point(s)",
            grid.n_x,
            grid.n_y,
            grid.dx,
            field.occupied_count,
            field.collapsed_count,
        )
        return field

    def detect(self, points: PointSet) -> Detection:
        """Estimate the cluster centroids of a point set.

        Args:
            points: Observations in data units.

        Returns:
            The detection artifacts; peak coordinates are in data units.
        """
        working, normalization = self.prepare(points)
        field = self.build_field(working)
        smoothed, trace = select_bandwidth(
            field,
            self.config.epsilon,
            self.config.max_iter_bandwidth,
            event_bus=self.event_bus,
        )
        peaks = locate_peaks(smoothed, self.config.peak_threshold, event_bus=self.event_bus)
        if normalization is not None:
            peaks = _to_data_units(peaks, normalization)
        return Detection(field=field, smoothed=smoothed, peaks=peaks, trace=trace, normalization=normalization)

    def cluster(
        self,
        points: PointSet,
        peaks: PeakSet,
        max_iter: int | None = None,
        tol: float | None = None,
    ) -> KMeansResult:
        """Run K-Means on the points seeded with the peaks (both in data units)."""
        return seed_and_cluster(points, peaks, max_iter=max_iter, tol=tol)


def _to_data_units(peaks: PeakSet, normalization: Normalization) -> PeakSet:
    """Map peak coordinates from the unit square back to data units."""
    if peaks.k == 0:
        return peaks
    coords = normalization.invert(peaks.centroids())
    mapped = tuple(
        replace(peak, x=float(x), y=float(y)) for peak, (x, y) in zip(peaks.peaks, coords.tolist(), strict=True)
    )
    return replace(peaks, peaks=mapped)
