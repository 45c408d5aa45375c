from .log_search_events import log_search_events

__all__ = ["log_search_events"]
