"""Django app configuration for the Routing bounded context.

The app module is the infrastructure package so that Django discovers
the management commands living under ``infrastructure/management``.
"""

from django.apps import AppConfig


class RoutingInfrastructureConfig(AppConfig):
    """Django app configuration for routing infrastructure."""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'routing.infrastructure'
    label = 'routing'
    verbose_name = 'Routing'
