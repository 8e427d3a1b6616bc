"""
Django settings for the conjugacy forge project.

Library code reads its own knobs from the ``CONJ_FORGE`` dict below via
``exactnum.conf.forge_setting``; every key there has a built-in default.

Environment variables:
- DB_ENGINE        "sqlite" (default) or "mysql"; MariaDB uses the DB_* vars
- CONJ_FORGE_LOG_LEVEL        log level for the library loggers (WARNING)
- CONJ_FORGE_MEM_LIMIT        oracle memory budget in bytes (2 GiB)
- CONJ_FORGE_AUDIT_WORKERS    default worker processes for audits (1)
"""

from pathlib import Path

import os

BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv(
    "DJANGO_SECRET_KEY",
    "django-insecure-conj-forge-development-key-change-me",
)

DEBUG = os.getenv("DJANGO_DEBUG", "True") == "True"

ALLOWED_HOSTS = [
    h for h in os.getenv("DJANGO_ALLOWED_HOSTS", "").split(",") if h
]


# Application definition

INSTALLED_APPS = [
    "django.contrib.admin",
    "django.contrib.auth",
    "django.contrib.contenttypes",
    "django.contrib.sessions",
    "django.contrib.messages",
    "django.contrib.staticfiles",
    "rest_framework",
    "exactnum",
    "lamplighter",
    "bs",
    "polycyclic",
    "oracle",
    "forge",
    "api",
]

MIDDLEWARE = [
    "django.middleware.security.SecurityMiddleware",
    "django.contrib.sessions.middleware.SessionMiddleware",
    "django.middleware.common.CommonMiddleware",
    "django.middleware.csrf.CsrfViewMiddleware",
    "django.contrib.auth.middleware.AuthenticationMiddleware",
    "django.contrib.messages.middleware.MessageMiddleware",
    "django.middleware.clickjacking.XFrameOptionsMiddleware",
]

ROOT_URLCONF = "config.urls"

# Only the admin and the browsable API render templates.
TEMPLATES = [
    {
        "BACKEND": "django.template.backends.django.DjangoTemplates",
        "DIRS": [],
        "APP_DIRS": True,
        "OPTIONS": {
            "context_processors": [
                "django.template.context_processors.request",
                "django.contrib.auth.context_processors.auth",
                "django.contrib.messages.context_processors.messages",
            ],
        },
    },
]

WSGI_APPLICATION = "config.wsgi.application"


# Database
#
# SQLite by default so the management commands work out of the box;
# set DB_ENGINE=mysql to record audit runs in MariaDB instead.
if os.getenv("DB_ENGINE", "sqlite") == "mysql":
    DATABASES = {
        "default": {
            "ENGINE": "django.db.backends.mysql",
            "NAME": os.getenv("DB_NAME", "conj_forge"),
            "USER": os.getenv("DB_USER", "root"),
            "PASSWORD": os.getenv("DB_PASSWORD", ""),
            "HOST": os.getenv("DB_HOST", "127.0.0.1"),
            "PORT": os.getenv("DB_PORT", "3306"),
            "OPTIONS": {
                "charset": "utf8mb4",
            },
        }
    }
else:
    DATABASES = {
        "default": {
            "ENGINE": "django.db.backends.sqlite3",
            "NAME": os.getenv("DB_NAME", str(BASE_DIR / "db.sqlite3")),
        }
    }

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"


# Password validation

AUTH_PASSWORD_VALIDATORS = [
    {
        "NAME": (
            "django.contrib.auth.password_validation."
            "UserAttributeSimilarityValidator"
        ),
    },
    {
        "NAME": (
            "django.contrib.auth.password_validation."
            "MinimumLengthValidator"
        ),
    },
    {
        "NAME": (
            "django.contrib.auth.password_validation."
            "CommonPasswordValidator"
        ),
    },
    {
        "NAME": (
            "django.contrib.auth.password_validation."
            "NumericPasswordValidator"
        ),
    },
]


# Internationalization

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = True

USE_TZ = True

STATIC_URL = "static/"

REST_FRAMEWORK = {
    "DEFAULT_AUTHENTICATION_CLASSES": [
        "rest_framework.authentication.SessionAuthentication",
    ],
}


# Logging
#
# Library modules log through ``logging.getLogger(__name__)``; warnings
# (oracle budget overruns, audit violations) reach stderr by default.
CONJ_FORGE_LOG_LEVEL = os.getenv("CONJ_FORGE_LOG_LEVEL", "WARNING")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "%(asctime)s %(levelname)s %(name)s: %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "loggers": {
        name: {
            "handlers": ["console"],
            "level": CONJ_FORGE_LOG_LEVEL,
            "propagate": False,
        }
        for name in (
            "exactnum",
            "lamplighter",
            "bs",
            "polycyclic",
            "oracle",
            "forge",
            "api",
        )
    },
}


# Conjugacy forge

CONJ_FORGE = {
    "ORACLE_MEM_LIMIT": int(
        os.getenv("CONJ_FORGE_MEM_LIMIT", str(2 * 1024**3))
    ),
    "ORACLE_BYTES_PER_ELEMENT": 512,
    "ORACLE_RADIUS": {"ll": 6, "bs": 8, "pc": 4},
    "PC_BOX_WINDOW": 60,
    "PC_BOX_SHIFT": 6,
    "PC_CANDIDATE_RADIUS": 2,
    "PC_WINDOW_SLACK": 4,
    "AUDIT_WORKERS": int(os.getenv("CONJ_FORGE_AUDIT_WORKERS", "1")),
    "REPORT_SCHEMA": 1,
}
