"""
bs/apps.py

Application configuration for the Baumslag-Solitar groups BS(1, q).
"""

from django.apps import AppConfig


class BsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "bs"
    verbose_name = "Baumslag-Solitar groups"
