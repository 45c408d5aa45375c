"""Routing infrastructure: instance files, benchmark ingestion and plots."""
