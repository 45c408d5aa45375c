"""In-process event bus for the application layers.

Both bounded contexts publish their lifecycle events (datasets written,
epochs finished, checkpoints saved) through this bus. Subscribers are
plain callables; a failing subscriber is logged and skipped.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from typing import Any, Callable, Dict, Iterable, List, Type, TypeVar

T = TypeVar('T')
EventHandler = Callable[[T], None]

logger = logging.getLogger(__name__)


class EventBus:
    """In-process event bus keyed by event class.

    Handlers subscribed to a base class also receive its subclasses, so a
    single logging subscriber can listen to every event of a context.
    """

    def __init__(self) -> None:
        """Initialize the event bus."""
        self._subscribers: Dict[type, List[EventHandler[Any]]] = defaultdict(list)
        self._event_count = 0

    def subscribe(self, event_type: Type[T], handler: EventHandler[T]) -> None:
        """Subscribe a handler to an event type and its subclasses.

        Args:
            event_type: The type of event to subscribe to.
            handler: Callable invoked with each published event.
        """
        self._subscribers[event_type].append(handler)
        logger.debug(f"Subscribed handler {_name(handler)} to {event_type.__name__}")

    def publish(self, event: Any) -> None:
        """Publish an event to every handler registered for its class hierarchy.

        Args:
            event: The event to publish.
        """
        event_type = type(event)
        handlers = [
            handler
            for registered, subscribed in self._subscribers.items()
            if issubclass(event_type, registered)
            for handler in subscribed
        ]

        self._event_count += 1
        logger.debug(f"Publishing event {event_type.__name__} (#{self._event_count}) to {len(handlers)} handlers")

        for handler in handlers:
            try:
                handler(event)
            except Exception as e:
                logger.error(
                    f"Error handling event {event_type.__name__} with {_name(handler)}: {e}",
                    exc_info=True
                )

    def publish_all(self, events: Iterable[Any]) -> None:
        """Publish multiple events in order."""
        for event in events:
            self.publish(event)


def _name(handler: Callable[..., Any]) -> str:
    return getattr(handler, "__name__", type(handler).__name__)
