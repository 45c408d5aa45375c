"""Log neural search events subscriber."""

from __future__ import annotations

import logging
from typing import Any

logger = logging.getLogger(__name__)

_DEBUG_EVENTS = {"neural_search.batch_completed"}


def log_search_events(event: Any) -> None:
    """Write one structured log entry per neural search event.

    Batch events go to DEBUG, everything else to INFO.
    """
    try:
        event_data = event.to_dict()
        level = logging.DEBUG if event.event_type in _DEBUG_EVENTS else logging.INFO
        logger.log(
            level,
            f"Neural search event: {event.event_type} for {event.aggregate_id} {event_data['data']}",
            extra={'event_data': event_data, 'event_type': event.event_type},
        )
    except Exception as e:
        logger.error(
            f"Failed to log neural search event {getattr(event, 'event_type', 'unknown')}: {e}",
            exc_info=True
        )
