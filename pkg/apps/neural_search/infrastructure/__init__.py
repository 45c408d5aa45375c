"""Neural search infrastructure: torch networks, batched environment, checkpoints and commands."""
