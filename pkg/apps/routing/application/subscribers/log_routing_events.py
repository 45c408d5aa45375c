"""Log routing events subscriber."""

from __future__ import annotations

import logging
from typing import Any

logger = logging.getLogger(__name__)


def log_routing_events(event: Any) -> None:
    """Write one structured log entry per routing domain event.

    Args:
        event: Any routing domain event.
    """
    try:
        event_data = event.to_dict()
        logger.info(
            f"Routing event: {event.event_type} for {event.aggregate_id}",
            extra={'event_data': event_data, 'event_type': event.event_type},
        )
    except Exception as e:
        logger.error(
            f"Failed to log routing event {getattr(event, 'event_type', 'unknown')}: {e}",
            exc_info=True
        )
