"""Events published by the peak detector."""

from dataclasses import dataclass

from spectral_seed.events import Event


@dataclass(frozen=True)
class PeaksDetectedEvent(Event):
    """Fired when the peak search over all three tilings has finished.

    Attributes:
        k: Number of peaks found.
        sigma_tilde: Bandwidth of the searched field.
        window_widths_px: Segment widths used, in pixels.
    """

    k: int
    sigma_tilde: float
    window_widths_px: tuple[int, ...]
