"""Event bus used by pipeline stages to report progress."""

from spectral_seed.events.base import Event, EventBus

__all__ = ["Event", "EventBus"]
