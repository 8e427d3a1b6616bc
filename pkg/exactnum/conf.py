"""
exactnum/conf.py

Access to the ``CONJ_FORGE`` settings dict with built-in fallbacks, so
library code keeps working when a key is missing from settings.
"""

from __future__ import annotations

from typing import Any

from django.conf import settings

DEFAULTS: dict[str, Any] = {
    "ORACLE_MEM_LIMIT": 2 * 1024**3,
    "ORACLE_BYTES_PER_ELEMENT": 512,
    "ORACLE_RADIUS": {"ll": 6, "bs": 8, "pc": 4},
    "PC_BOX_WINDOW": 60,
    "PC_BOX_SHIFT": 6,
    "PC_CANDIDATE_RADIUS": 2,
    "PC_WINDOW_SLACK": 4,
    "AUDIT_WORKERS": 1,
    "REPORT_SCHEMA": 1,
}


def forge_setting(name: str) -> Any:
    """Return ``settings.CONJ_FORGE[name]``, or the default for ``name``."""
    configured = getattr(settings, "CONJ_FORGE", None) or {}
    if name in configured:
        return configured[name]
    return DEFAULTS[name]
