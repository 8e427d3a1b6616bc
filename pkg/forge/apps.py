"""
forge/apps.py

Application configuration for the command-line front end and audit runs.
"""

from django.apps import AppConfig


class ForgeConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "forge"
    verbose_name = "Conjugacy forge"
