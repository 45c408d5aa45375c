"""
Django settings for the N2S pickup-and-delivery search project.

This follows a modular Django architecture with bounded contexts.
Each app in the 'apps' directory represents a bounded context:
``routing`` (problem model, datasets, plots) and ``neural_search``
(networks, training, evaluation).

Values can be overridden from the environment or a ``.env`` file.
"""

import os
import sys
from pathlib import Path

from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Add apps directory to Python path for modular app imports
sys.path.insert(0, str(BASE_DIR / 'apps'))

load_dotenv(BASE_DIR / '.env')

SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'n2s-local-only')

DEBUG = os.getenv('DJANGO_DEBUG', 'False').lower() == 'true'

ALLOWED_HOSTS: list[str] = []


# Application definition
DJANGO_APPS = [
    'django.contrib.contenttypes',
]

# Local apps (bounded contexts)
LOCAL_APPS = [
    'routing.infrastructure.apps.RoutingInfrastructureConfig',
    'neural_search.infrastructure.apps.NeuralSearchInfrastructureConfig',
]

INSTALLED_APPS = DJANGO_APPS + LOCAL_APPS

ROOT_URLCONF = 'config.urls'

WSGI_APPLICATION = 'config.wsgi.application'

# The commands keep no database state.
DATABASES: dict = {}

TIME_ZONE = 'UTC'

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# N2S configuration

N2S_DATA_DIR = Path(os.getenv('N2S_DATA_DIR', BASE_DIR / 'data'))
N2S_RUNS_DIR = Path(os.getenv('N2S_RUNS_DIR', BASE_DIR / 'runs'))

N2S = {
    'DEVICE': os.getenv('N2S_DEVICE', 'cpu'),
    'ENV_DTYPE': os.getenv('N2S_ENV_DTYPE', 'float32'),
    'EVAL_STEPS': int(os.getenv('N2S_EVAL_STEPS', '1000')),
    'EVAL_BATCH_SIZE': int(os.getenv('N2S_EVAL_BATCH_SIZE', '64')),
    'EPSILON': float(os.getenv('N2S_EPSILON', '0.1')),
    'PLOT_DPI': int(os.getenv('N2S_PLOT_DPI', '120')),
}


# Logging Configuration
# Console always; a file handler when the logs/ directory exists.

LOG_LEVEL = os.getenv('N2S_LOG_LEVEL', 'INFO')
LOG_HANDLERS = ['console'] + (['file'] if (BASE_DIR / 'logs').is_dir() else [])

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
        'file': {
            'class': 'logging.FileHandler',
            'filename': BASE_DIR / 'logs' / 'n2s.log',
            'formatter': 'verbose',
            'delay': True,
        },
    },
    'root': {
        'handlers': LOG_HANDLERS,
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': LOG_HANDLERS,
            'level': 'INFO',
            'propagate': False,
        },
        'routing': {
            'handlers': LOG_HANDLERS,
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'neural_search': {
            'handlers': LOG_HANDLERS,
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}
