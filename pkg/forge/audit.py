"""
forge/audit.py

Randomised audits of the conjugator length bounds.

Each sample draws u and γ, sets v = γ⁻¹uγ and asks the family's conjugacy
procedure for its own witness γ′. The lamplighter bound is asserted on
exact word lengths; the other families report ratios of length estimates
and assert only the identities their construction relies on.

Samples use independent RNG streams keyed by (seed, index) and are merged
by index, so a report depends only on its flags, never on the worker count.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import Any

import django

from exactnum.conf import forge_setting
from exactnum.exceptions import ConjForgeError
from exactnum.outcomes import WITNESS_CHECK
from oracle.generating_sets import Family
from polycyclic.metric import witness_norm_inequality

from .sampling import sample_conjugate_pair, sample_rng
from .services import GroupContext, jsonable

logger = logging.getLogger(__name__)

NORM_TOLERANCE = 1e-6


def _ratio(witness_length: float, u_length: float, v_length: float) -> float:
    denominator = u_length + v_length
    if denominator == 0:
        return 0.0
    return witness_length / denominator


def _family_checks(
    ctx: GroupContext, u: Any, v: Any, outcome: Any
) -> dict[str, bool]:
    checks = {
        name: bool(ok)
        for name, ok in outcome.certificate.items()
        if name != WITNESS_CHECK
    }
    spec = ctx.spec
    if (
        ctx.family is Family.POLYCYCLIC
        and spec.k == 1
        and spec.hyperbolic
        and any(u.b)
    ):
        lhs, rhs = witness_norm_inequality(u, v, outcome.witness, spec)
        checks["norm_inequality"] = lhs <= rhs * (1 + NORM_TOLERANCE) + NORM_TOLERANCE
    return checks


def audit_sample(ctx: GroupContext, seed: int, max_len: int, index: int) -> dict[str, Any]:
    rng = sample_rng(seed, index)
    u, gamma, v = sample_conjugate_pair(ctx, rng, max_len)
    record: dict[str, Any] = {
        "index": index,
        "u": ctx.to_json(u),
        "v": ctx.to_json(v),
        "gamma": ctx.to_json(gamma),
    }
    try:
        outcome = ctx.conjugacy(u, v)
    except ConjForgeError as exc:
        record.update(
            witness=None,
            lengths={},
            ratio=None,
            verified=False,
            checks={},
            error=f"{type(exc).__name__}: {exc}",
            violation=True,
        )
        return record

    verified = bool(
        outcome.conjugate
        and ctx.multiply(u, outcome.witness) == ctx.multiply(outcome.witness, v)
    )
    checks = _family_checks(ctx, u, v, outcome) if outcome.conjugate else {}
    lengths = dict(outcome.lengths)
    ratio = (
        _ratio(lengths["witness"], lengths["u"], lengths["v"])
        if outcome.conjugate
        else None
    )
    record.update(
        witness=ctx.to_json(outcome.witness) if outcome.conjugate else None,
        lengths=lengths,
        ratio=ratio,
        verified=verified,
        checks=checks,
        violation=not verified or not all(checks.values()),
    )
    return record


def run_audit(
    ctx: GroupContext,
    samples: int,
    seed: int,
    max_len: int,
    workers: int | None = None,
) -> dict[str, Any]:
    """Build the audit report; identical flags give an identical report."""
    workers = forge_setting("AUDIT_WORKERS") if workers is None else workers
    task = partial(audit_sample, ctx, seed, max_len)
    indices = range(samples)
    if workers > 1 and samples > 1:
        with ProcessPoolExecutor(
            max_workers=workers, initializer=django.setup
        ) as pool:
            chunk = max(1, samples // (4 * workers))
            records = list(pool.map(task, indices, chunksize=chunk))
    else:
        records = [task(i) for i in indices]

    ratios = [r["ratio"] for r in records if r["ratio"] is not None]
    violations = [r["index"] for r in records if r["violation"]]
    if violations:
        logger.warning(
            "audit of %s: %d violations (first at sample %d)",
            ctx.descriptor()["group"], len(violations), violations[0],
        )
    return jsonable({
        "schema": forge_setting("REPORT_SCHEMA"),
        "group": ctx.descriptor(),
        "samples": samples,
        "seed": seed,
        "max_len": max_len,
        "theorem": ctx.theorem(),
        "records": records,
        "aggregate": {
            "max_ratio": max(ratios) if ratios else None,
            "mean_ratio": sum(ratios) / len(ratios) if ratios else None,
            "verified": sum(1 for r in records if r["verified"]),
        },
        "violations": len(violations),
        "violation_indices": violations,
    })


def dump_report(report: dict[str, Any]) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_report(report: dict[str, Any], path: str | Path) -> None:
    """
    Raises:
        OSError: the path cannot be written.
    """
    Path(path).write_text(dump_report(report), encoding="utf-8")
