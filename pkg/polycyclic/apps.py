"""
polycyclic/apps.py

Application configuration for the semidirect products Zⁿ ⋊ Zᵏ.
"""

from django.apps import AppConfig


class PolycyclicConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "polycyclic"
    verbose_name = "Polycyclic semidirect products"
