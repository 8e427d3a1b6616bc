"""
lamplighter/apps.py

Application configuration for the lamplighter groups Z_q wr Z.
"""

from django.apps import AppConfig


class LamplighterConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "lamplighter"
    verbose_name = "Lamplighter groups"
