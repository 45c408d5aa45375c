"""Neural search application layer: training, search and evaluation use cases."""
