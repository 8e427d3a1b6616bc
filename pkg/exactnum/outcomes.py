"""
exactnum/outcomes.py

The result record returned by every conjugacy procedure.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from typing import Any

from .exceptions import InternalInvariantError

WITNESS_CHECK = "u*g == g*v"


@dataclass(frozen=True)
class ConjugacyOutcome:
    """
    Decision plus an optional conjugator g with u·g = g·v.

    ``certificate`` names each exact identity that was checked and its
    result, ``lengths`` holds |u|, |v| and |g| (exact or estimated, per
    family) and ``statistics`` records how much searching was done.
    Build outcomes with :meth:`found` or :meth:`not_conjugate`; the former
    refuses a witness that does not verify. Other certificate entries are
    recorded as given and audited by the caller.
    """

    conjugate: bool
    witness: Any = None
    certificate: Mapping[str, bool] = field(default_factory=dict)
    lengths: Mapping[str, float | int | None] = field(default_factory=dict)
    statistics: Mapping[str, Any] = field(default_factory=dict)

    @classmethod
    def found(
        cls,
        u: Any,
        v: Any,
        witness: Any,
        multiply: Callable[[Any, Any], Any],
        *,
        certificate: Mapping[str, bool] | None = None,
        lengths: Mapping[str, float | int | None] | None = None,
        statistics: Mapping[str, Any] | None = None,
    ) -> ConjugacyOutcome:
        if multiply(u, witness) != multiply(witness, v):
            raise InternalInvariantError(
                f"witness {witness!r} does not conjugate {u!r} to {v!r}"
            )
        checks = dict(certificate or {})
        checks[WITNESS_CHECK] = True
        return cls(
            True,
            witness,
            checks,
            dict(lengths or {}),
            dict(statistics or {}),
        )

    @classmethod
    def not_conjugate(
        cls,
        reason: str,
        *,
        lengths: Mapping[str, float | int | None] | None = None,
        statistics: Mapping[str, Any] | None = None,
    ) -> ConjugacyOutcome:
        stats = dict(statistics or {})
        stats["reason"] = reason
        return cls(False, None, {}, dict(lengths or {}), stats)
