"""
Django settings for isolatta project.

The project has no web surface; Django supplies the app layout, the
management-command CLI, settings and the test runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
import os
from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Load environment variables from .env file
load_dotenv(BASE_DIR / '.env')


# Nothing is signed or served; Django still insists on a key.
SECRET_KEY = os.environ.get(
    'SECRET_KEY', 'django-insecure-isolatta-local-computation-only')

DEBUG = os.environ.get('DEBUG', '') == '1'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',
    # Third-party
    'rest_framework',

    # Local apps
    'groups',
    'lattice',
    'isolation',
    'classifier',
    'catalog',
    'cli',
]


# Database
# Nothing is persisted (catalogs are flat files); the default stays so
# stock tooling such as `manage.py check` works unchanged.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

USE_TZ = True
TIME_ZONE = 'UTC'


# Isolatta configuration

ISOLATTA = {
    # Largest group order any constructor will build, validated by groups.config
    'ORDER_CAP': os.environ.get('ISOLATTA_CAP', '200'),
    # Default catalog bound for the verify and search commands
    'DEFAULT_MAX_ORDER': 24,
    # Orders whose isomorphism classes the recipe list covers completely,
    # in addition to the rule-based orders (primes, p^2, p^3, pq)
    'EXHAUSTIVE_SMALL_ORDERS': 15,
    'FORMAT_VERSION': 1,
}


# Django REST Framework: only the serializers and the JSON renderer are used
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
}


# Logging goes to stderr so command output on stdout stays deterministic
LOG_LEVEL = os.environ.get('ISOLATTA_LOG_LEVEL', 'WARNING').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        app: {'handlers': ['console'], 'level': LOG_LEVEL, 'propagate': False}
        for app in ('groups', 'lattice', 'isolation', 'classifier', 'catalog', 'cli')
    },
}
