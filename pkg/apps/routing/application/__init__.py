"""Routing application layer: use cases over instances and datasets."""
