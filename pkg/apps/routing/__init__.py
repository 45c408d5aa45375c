"""Routing bounded context: pickup-and-delivery problem model and search MDP."""
