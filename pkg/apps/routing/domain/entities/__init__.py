from .search_state import SearchState

__all__ = ["SearchState"]
