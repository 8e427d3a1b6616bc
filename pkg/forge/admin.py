"""
forge/admin.py

Admin registrations for recorded audit runs.
"""

from django.contrib import admin

from .models import AuditRun


@admin.register(AuditRun)
class AuditRunAdmin(admin.ModelAdmin):
    list_display = (
        "family",
        "q",
        "seed",
        "samples",
        "max_len",
        "violations",
        "max_ratio",
        "created_at",
    )
    list_filter = ("family", "created_at")
    search_fields = ("seed",)
    readonly_fields = ("report", "created_at")
