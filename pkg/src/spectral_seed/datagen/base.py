"""Cluster specifications for synthetic data generation."""

import math
from dataclasses import dataclass
from typing import Any

from spectral_seed.exceptions import SpectralSeedError


class InvalidClusterSpecError(SpectralSeedError, ValueError):
    """Raised when a cluster specification has a bad spread, count or field."""


class EmptySpecError(SpectralSeedError, ValueError):
    """Raised when data generation is asked for zero clusters."""


@dataclass(frozen=True)
class ClusterSpec:
    """One axis-aligned Gaussian cluster.

    Attributes:
        mu_x: Centre x coordinate.
        mu_y: Centre y coordinate.
        sigma_x: Standard deviation along x, > 0.
        sigma_y: Standard deviation along y, > 0.
        count: Number of points to draw, >= 1.
    """

    mu_x: float
    mu_y: float
    sigma_x: float
    sigma_y: float
    count: int

    def __post_init__(self) -> None:
        """Validate the spread and the point count."""
        for name in ("mu_x", "mu_y", "sigma_x", "sigma_y"):
            if not math.isfinite(getattr(self, name)):
                msg = f"{name} must be finite, got {getattr(self, name)}"
                raise InvalidClusterSpecError(msg)
        if self.sigma_x <= 0 or self.sigma_y <= 0:
            msg = f"Cluster spreads must be positive, got sigma_x={self.sigma_x}, sigma_y={self.sigma_y}"
            raise InvalidClusterSpecError(msg)
        if isinstance(self.count, bool) or not isinstance(self.count, int) or self.count < 1:
            msg = f"Cluster count must be a positive integer, got {self.count!r}"
            raise InvalidClusterSpecError(msg)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ClusterSpec:
        """Create a spec from a {mu_x, mu_y, sigma_x, sigma_y, count} mapping.

        Raises:
            InvalidClusterSpecError: If a field is missing or has the wrong type.
        """
        try:
            values = {name: float(data[name]) for name in ("mu_x", "mu_y", "sigma_x", "sigma_y")}
            count = data["count"]
        except KeyError as e:
            msg = f"Cluster spec is missing field {e.args[0]!r}"
            raise InvalidClusterSpecError(msg) from e
        except (TypeError, ValueError) as e:
            msg = f"Cluster spec has a malformed field: {e}"
            raise InvalidClusterSpecError(msg) from e

        if isinstance(count, float) and count.is_integer():
            count = int(count)
        return cls(count=count, **values)

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON-serializable dictionary."""
        return {
            "mu_x": self.mu_x,
            "mu_y": self.mu_y,
            "sigma_x": self.sigma_x,
            "sigma_y": self.sigma_y,
            "count": self.count,
        }
