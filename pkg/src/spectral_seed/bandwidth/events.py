"""Events published during bandwidth selection."""

from dataclasses import dataclass

from spectral_seed.events import Event


@dataclass(frozen=True)
class SmoothingPassEvent(Event):
    """Fired after every smoothing pass of the bandwidth schedule.

    Attributes:
        n: Iteration number.
        sigma_tilde: Frequency-domain standard deviation of this pass.
        correlation: Correlation between raster and smoothed field.
        delta: Change of correlation from the previous pass, None on the first.
    """

    n: int
    sigma_tilde: float
    correlation: float
    delta: float | None


@dataclass(frozen=True)
class BandwidthConvergedEvent(Event):
    """Fired once the correlation change drops below epsilon.

    Attributes:
        n: Iteration at which the run stopped.
        sigma_tilde: Selected frequency-domain standard deviation.
        epsilon: Threshold that was met.
    """

    n: int
    sigma_tilde: float
    epsilon: float
