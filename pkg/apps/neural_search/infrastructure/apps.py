"""Django app configuration for the Neural Search bounded context."""

from django.apps import AppConfig


class NeuralSearchInfrastructureConfig(AppConfig):
    """Django app configuration for neural search infrastructure."""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'neural_search.infrastructure'
    label = 'neural_search'
    verbose_name = 'Neural Search'
