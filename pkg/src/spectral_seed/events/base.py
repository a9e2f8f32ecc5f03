"""Progress events published by the pipeline stages.

Bandwidth selection and peak detection report each step on an optional bus. The
command-line front-end subscribes to log them and tests subscribe to count
smoothing passes; the stages themselves never look at who is listening.

Example usage:
    bus = EventBus()
    bus.subscribe(SmoothingPassEvent, lambda e: print(e.n, e.correlation))
    select_bandwidth(field, epsilon=0.01, event_bus=bus)
"""

from collections import defaultdict
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, TypeVar

if TYPE_CHECKING:
    from collections.abc import Callable

E = TypeVar("E", bound="Event")


@dataclass(frozen=True)
class Event:
    """Base class of all pipeline events."""


class EventBus:
    """Synchronous publish/subscribe hub keyed by exact event type.

    Handlers run in subscription order on the publishing thread and their
    exceptions reach the publisher. Not thread-safe; each pipeline owns one bus.
    """

    def __init__(self) -> None:
        """Create a bus without handlers."""
        self._handlers: defaultdict[type[Event], list[Callable[[Any], None]]] = defaultdict(list)

    def subscribe(self, event_type: type[E], handler: Callable[[E], None]) -> None:
        """Call handler for every published event of exactly event_type.

        Subscribing the same handler twice makes it run twice.
        """
        self._handlers[event_type].append(handler)

    def unsubscribe(self, event_type: type[E], handler: Callable[[E], None]) -> None:
        """Drop every subscription of handler to event_type; unknown handlers are ignored."""
        remaining = [h for h in self._handlers.get(event_type, []) if h != handler]
        if remaining:
            self._handlers[event_type] = remaining
        else:
            self._handlers.pop(event_type, None)

    def has_subscribers(self, event_type: type[Event]) -> bool:
        """Whether any handler listens for event_type."""
        return bool(self._handlers.get(event_type))

    def publish(self, event: Event) -> int:
        """Deliver an event to the handlers of its type.

        Returns:
            The number of handlers called.
        """
        handlers = list(self._handlers.get(type(event), ()))
        for handler in handlers:
            handler(event)
        return len(handlers)

    def clear(self) -> None:
        """Remove every handler."""
        self._handlers.clear()
