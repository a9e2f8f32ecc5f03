"""Effective run configuration.

RunConfig freezes the handful of parameters a pipeline run depends on. It is
built from the lazy settings plus explicit overrides (typically command-line
flags) and is embedded verbatim into every JSON artifact for provenance.
"""

from dataclasses import asdict, dataclass, fields, replace
from typing import Any


@dataclass(frozen=True)
class RunConfig:
    """Parameters of one detection / seeding run.

    Attributes:
        epsilon: Bandwidth convergence threshold on the correlation change.
        peak_threshold: Normalized density floor for valid local maxima.
        gap_fraction: Fraction of points whose gaps define the mesh spacing.
        max_iter_bandwidth: Iteration guard for bandwidth selection.
        grid_cap: Maximum pixel count per axis.
        seed: Seed used by synthetic data generation.
        gap_order: Gap selection order for the spacing estimate.
        margin_px: Minimum empty border around the data, in pixels.
        margin_fraction: Empty border relative to the data span.
        normalize: Whether points are min-max normalized before meshing.
        dx: Explicit mesh spacing; None means "estimate from the data".
    """

    epsilon: float = 0.01
    peak_threshold: float = 0.1
    gap_fraction: float = 0.05
    max_iter_bandwidth: int = 64
    grid_cap: int = 1024
    seed: int = 0
    gap_order: str = "largest"
    margin_px: int = 4
    margin_fraction: float = 0.0
    normalize: bool = False
    dx: float | None = None

    @classmethod
    def from_settings(cls, **overrides: Any) -> RunConfig:  # noqa: ANN401
        """Build a config from the current settings, applying non-None overrides.

        Args:
            **overrides: Field values that take precedence over settings. Keys whose
                value is None are ignored so optional CLI flags can be passed through.

        Returns:
            The effective configuration.

        Raises:
            TypeError: If an override does not name a RunConfig field.
        """
        # Import here to avoid a circular import with spectral_seed.conf
        from spectral_seed.conf import settings  # noqa: PLC0415

        config = cls(
            epsilon=settings.EPSILON,
            peak_threshold=settings.PEAK_THRESHOLD,
            gap_fraction=settings.GAP_FRACTION,
            max_iter_bandwidth=settings.MAX_ITER_BANDWIDTH,
            grid_cap=settings.GRID_CAP,
            seed=settings.SEED,
            gap_order=settings.SPACING_GAP_ORDER,
            margin_px=settings.GRID_MARGIN_PX,
            margin_fraction=settings.GRID_MARGIN_FRACTION,
        )
        known = {f.name for f in fields(cls)}
        unknown = set(overrides) - known
        if unknown:
            msg = f"Unknown RunConfig fields: {sorted(unknown)}"
            raise TypeError(msg)
        return replace(config, **{k: v for k, v in overrides.items() if v is not None})

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON-serializable dictionary."""
        return asdict(self)
