"""
Django settings for sphere_resonance project.

For more information on this file, see
https://docs.djangoproject.com/en/5.2/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Values already present in the environment win over the .env file
load_dotenv(BASE_DIR / '.env')


def env_float(name, default):
    return float(os.environ.get(name, default))


def env_int(name, default):
    return int(os.environ.get(name, default))


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', 'django-insecure-sphere-resonance-local-only')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.environ.get('DJANGO_DEBUG', 'true').lower() == 'true'

ALLOWED_HOSTS = os.environ.get('DJANGO_ALLOWED_HOSTS', '*').split(',')


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',

    # Third-party apps
    'rest_framework',
    'corsheaders',

    # Project apps
    'special',
    'resonances',
    'limits',
    'moments',
    'expansions',
    'api',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'corsheaders.middleware.CorsMiddleware',  # CORS middleware
    'django.middleware.common.CommonMiddleware',
]

# The endpoints are read-only and serve plotting front ends on other origins
CORS_ALLOW_ALL_ORIGINS = True
CORS_ALLOW_METHODS = [
    "GET",
    "OPTIONS",
]

ROOT_URLCONF = 'sphere_resonance.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.request',
            ],
        },
    },
]

WSGI_APPLICATION = 'sphere_resonance.wsgi.application'


# Database
# Nothing is persisted; every result is recomputed from closed forms or quadrature.

DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

# Numbers leave the process with a dot decimal separator regardless of locale
USE_I18N = False

USE_TZ = True


# Django Rest Framework settings
REST_FRAMEWORK = {
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [
        'rest_framework.permissions.AllowAny',
    ],
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'UNAUTHENTICATED_USER': None,
    'EXCEPTION_HANDLER': 'api.views.resonance_exception_handler',
}


# Numerical defaults. Library code takes explicit arguments; commands and
# views read these through the from_settings() constructors.
RESONANCE = {
    'SOLVER_TOL': env_float('RESONANCE_SOLVER_TOL', 1e-13),
    'SOLVER_MAX_ITER': env_int('RESONANCE_SOLVER_MAX_ITER', 60),
    'SOLVER_SEED_OFFSET': complex(os.environ.get('RESONANCE_SOLVER_SEED_OFFSET', '0.1+0.1j')),
    'SOLVER_STEP_TOL': env_float('RESONANCE_SOLVER_STEP_TOL', 1e-10),
    'CERTIFICATION_THRESHOLD': env_float('RESONANCE_CERTIFICATION_THRESHOLD', 1e-9),
    'MC_SAMPLES': env_int('RESONANCE_MC_SAMPLES', 1_000_000),
    'MC_SEED': env_int('RESONANCE_MC_SEED', 7),
    'MC_SHARDS': env_int('RESONANCE_MC_SHARDS', 8),
    'MC_WORKERS': env_int('RESONANCE_MC_WORKERS', 1),
    'QUADRATURE_ORDER': env_int('RESONANCE_QUADRATURE_ORDER', 64),
    'TAYLOR_DPS': env_int('RESONANCE_TAYLOR_DPS', 40),
    'FIGURE_H_MIN': env_float('RESONANCE_FIGURE_H_MIN', 0.01),
    'FIGURE_H_MAX': env_float('RESONANCE_FIGURE_H_MAX', 0.5),
    'FIGURE_STEPS': env_int('RESONANCE_FIGURE_STEPS', 100),
}


# Logging
LOG_LEVEL = os.environ.get('RESONANCE_LOG_LEVEL', 'WARNING').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': LOG_LEVEL,
    },
    'loggers': {
        app: {'level': LOG_LEVEL, 'propagate': True}
        for app in ('special', 'resonances', 'limits', 'moments', 'expansions', 'api')
    },
}
