"""
URL configuration for the N2S project.

The project is driven by management commands; only a health check is
served.
"""

from django.http import JsonResponse
from django.urls import path


def health_check(request):
    """Health check endpoint for monitoring."""
    return JsonResponse({
        'status': 'healthy',
        'service': 'n2s-pdp',
        'version': '1.0.0'
    })


urlpatterns = [
    path('health/', health_check, name='health_check'),
]
