"""
exactnum/apps.py

Application configuration for the exact arithmetic kernels.
"""

from django.apps import AppConfig


class ExactnumConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "exactnum"
    verbose_name = "Exact arithmetic"
