"""
forge/models.py

Database models for:
- AuditRun (one recorded ``manage.py audit`` run and its full report)
"""

from __future__ import annotations

from typing import Any

from django.core.exceptions import ValidationError
from django.db import models


class AuditRun(models.Model):
    """
    A persisted audit report.

    The report JSON is stored verbatim; the summary columns duplicate the
    fields the admin and the API list by.
    """

    FAMILY_LAMPLIGHTER = "ll"
    FAMILY_BS = "bs"
    FAMILY_POLYCYCLIC = "pc"

    FAMILY_CHOICES = (
        (FAMILY_LAMPLIGHTER, "Lamplighter"),
        (FAMILY_BS, "Baumslag-Solitar"),
        (FAMILY_POLYCYCLIC, "Polycyclic"),
    )

    family = models.CharField(max_length=2, choices=FAMILY_CHOICES)
    q = models.PositiveIntegerField(null=True, blank=True)
    spec = models.JSONField(null=True, blank=True)
    seed = models.BigIntegerField()
    samples = models.PositiveIntegerField()
    max_len = models.PositiveIntegerField()
    violations = models.PositiveIntegerField(default=0)
    max_ratio = models.FloatField(null=True, blank=True)
    mean_ratio = models.FloatField(null=True, blank=True)
    report = models.JSONField()
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ("-created_at", "-id")

    def clean(self):
        super().clean()
        if self.family in (self.FAMILY_LAMPLIGHTER, self.FAMILY_BS) and not self.q:
            raise ValidationError({"q": "Lamplighter and BS runs need q."})
        if self.family == self.FAMILY_POLYCYCLIC and not self.spec:
            raise ValidationError({"spec": "Polycyclic runs need a spec."})

    @classmethod
    def from_report(cls, report: dict[str, Any]) -> AuditRun:
        """Unsaved run built from a report produced by ``run_audit``."""
        group = report["group"]
        aggregate = report["aggregate"]
        return cls(
            family=group["group"],
            q=group.get("q"),
            spec=group.get("spec"),
            seed=report["seed"],
            samples=report["samples"],
            max_len=report["max_len"],
            violations=report["violations"],
            max_ratio=aggregate["max_ratio"],
            mean_ratio=aggregate["mean_ratio"],
            report=report,
        )

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def __str__(self) -> str:
        return f"{self.family} audit seed={self.seed} ({self.samples} samples)"
