"""Neural search domain layer: configurations, augmentation and events."""
