"""Data types and errors for bandwidth selection."""

from dataclasses import dataclass, field
from typing import Any

from spectral_seed.exceptions import SpectralSeedError


class ZeroVarianceError(SpectralSeedError, ValueError):
    """Raised when a correlation is requested for a constant array."""


@dataclass(frozen=True)
class ConvergenceEntry:
    """One bandwidth iteration.

    Attributes:
        n: Iteration number, starting at 1.
        sigma_tilde: Frequency-domain standard deviation n / L.
        correlation: Pearson correlation between the raster and the smoothed field.
        delta: Absolute change of correlation from the previous iteration, None for n = 1.
    """

    n: int
    sigma_tilde: float
    correlation: float
    delta: float | None = None

    def to_dict(self) -> dict[str, Any]:
        """Convert to a JSON-serializable dictionary."""
        return {
            "n": self.n,
            "sigma_tilde": self.sigma_tilde,
            "correlation": self.correlation,
            "delta": self.delta,
        }


@dataclass
class ConvergenceTrace:
    """History of a bandwidth selection run.

    Attributes:
        epsilon: Convergence threshold the run used.
        entries: One entry per iteration, n = 1, 2, ... without gaps.
        converged_n: Iteration at which the criterion was met, None while running
            or when the run did not converge.
    """

    epsilon: float
    entries: list[ConvergenceEntry] = field(default_factory=list)
    converged_n: int | None = None

    @property
    def converged(self) -> bool:
        """Whether the convergence criterion was met."""
        return self.converged_n is not None

    @property
    def last(self) -> ConvergenceEntry | None:
        """The most recent entry, if any."""
        return self.entries[-1] if self.entries else None

    def append(self, entry: ConvergenceEntry) -> None:
        """Record the next iteration.

        Raises:
            ValueError: If the entry does not continue the sequence of n.
        """
        expected = len(self.entries) + 1
        if entry.n != expected:
            msg = f"Trace expected iteration {expected}, got {entry.n}"
            raise ValueError(msg)
        self.entries.append(entry)

    def to_list(self) -> list[dict[str, Any]]:
        """Serialize the entries as a JSON array of {n, sigma_tilde, correlation, delta}."""
        return [entry.to_dict() for entry in self.entries]

    def to_dict(self) -> dict[str, Any]:
        """Serialize the whole trace."""
        return {
            "epsilon": self.epsilon,
            "converged_n": self.converged_n,
            "entries": self.to_list(),
        }


class BandwidthConvergenceError(SpectralSeedError, RuntimeError):
    """Raised when max_iter bandwidths were tried without meeting the criterion.

    Attributes:
        trace: The full trace of the failed run, for diagnostics.
    """

    def __init__(self, message: str, trace: ConvergenceTrace) -> None:
        """Initialize the error with the trace of the failed run."""
        super().__init__(message)
        self.trace = trace
