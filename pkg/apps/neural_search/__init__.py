"""Neural Search bounded context: N2S networks, training and inference."""
