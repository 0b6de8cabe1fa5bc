"""
Django settings for gpoincare.

The project has no database, middleware or URL configuration; Django is
used for configuration, management commands and template rendering.
"""

import os

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# only used by Django internals, nothing is signed
SECRET_KEY = 'gpoincare-has-no-secrets'

DEBUG = False

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'equivariant.apps.EquivariantConfig',
]

DATABASES = {}

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {},
    },
]

USE_TZ = True

GPOINCARE = {
    # truncation bound when neither --degree-bound nor the scene sets one
    'DEGREE_BOUND': 10,
    # hard cap on the jet degree of the jets oracle
    'JETS_DEGREE_CAP': 40,
    # generic chart values every generic stratum is evaluated at
    'GENERIC_SAMPLES': 2,
    # searched before the bundled scenes
    'SCENE_DIRS': [
        path for path in os.environ.get('GPOINCARE_SCENE_DIRS', '').split(os.pathsep) if path
    ],
}

LOG_LEVEL = os.environ.get('GPOINCARE_LOG_LEVEL', 'INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
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
        'django': {
            'handlers': ['console'],
            'level': 'INFO',
            'propagate': True,
        },
        'equivariant': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}
