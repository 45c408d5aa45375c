from .log_routing_events import log_routing_events

__all__ = ["log_routing_events"]
