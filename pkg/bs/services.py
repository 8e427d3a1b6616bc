"""
bs/services.py

Conjugacy in BS(1, q) with explicit conjugators.

For u = (s, P), v = (r, Q) and γ = (n, f), u·γ = γ·v holds iff s = r and

    P + qˢ·f = f + qⁿ·Q.

With s = 0 this says P = qⁿQ. With s ≠ 0 the conjugator can be moved to
0 <= n < |s| by multiplying with powers of u, and then
f = (qⁿQ - P)/(qˢ - 1) must lie in Z[1/q]; qˢ - 1 is coprime to q, so
membership is an exact divisibility test.
"""

from __future__ import annotations

import logging
import math

from exactnum.exceptions import InternalInvariantError, InvalidArgument, NotDivisible
from exactnum.outcomes import ConjugacyOutcome
from exactnum.qfraction import QFraction, exact_divide

from .elements import BSElement, bs_inv, bs_mul
from .metric import bs_length_bounds

logger = logging.getLogger(__name__)

# |γ| <= 2/log√2 · (|u| + |v|), audited against estimates only
CONJUGATOR_CONSTANT = 2.0 / math.log(math.sqrt(2.0))


def _lengths(u: BSElement, v: BSElement) -> dict:
    return {
        "u": bs_length_bounds(u).lower,
        "v": bs_length_bounds(v).lower,
    }


def _found(u, v, witness, lengths, certificate, statistics):
    return ConjugacyOutcome.found(
        u,
        v,
        witness,
        bs_mul,
        certificate=certificate,
        lengths={**lengths, "witness": bs_length_bounds(witness).upper},
        statistics=statistics,
    )


def _conjugacy_zero_shift(u: BSElement, v: BSElement, lengths: dict):
    q, P, Q = u.q, u.f, v.f
    statistics = {"case": "zero-shift"}
    if not P and not Q:
        return _found(u, v, BSElement.identity(q), lengths, {}, statistics)
    if not P or not Q or P.q_free_part() != Q.q_free_part():
        return ConjugacyOutcome.not_conjugate(
            "translation parts differ by more than a power of q",
            lengths=lengths,
            statistics=statistics,
        )
    n = Q.exponent - P.exponent
    return _found(
        u,
        v,
        BSElement(q, n, QFraction.zero(q)),
        lengths,
        {"translations_power_related": Q.scale(n) == P},
        statistics,
    )


def _conjugacy_nonzero_shift(u: BSElement, v: BSElement, lengths: dict):
    q = u.q
    inverted = u.n < 0
    a, b = (bs_inv(u), bs_inv(v)) if inverted else (u, v)
    s, P, Q = a.n, a.f, b.f
    divisor = q**s - 1
    statistics = {
        "case": "nonzero-shift",
        "normalized_shift": s,
        "inverted": inverted,
        "divisor": divisor,
    }

    for n in range(s):
        rhs = Q.scale(n) - P
        try:
            f = exact_divide(rhs, divisor)
        except NotDivisible:
            continue
        statistics["candidates_tried"] = n + 1
        certificate = {
            "offset_in_range": 0 <= n < s,
            "divisibility": f * divisor == rhs,
            "valuation_inequality": f.v0 >= min(P.v0, Q.v0 + n),
        }
        failed = [name for name, ok in certificate.items() if not ok]
        if failed:
            raise InternalInvariantError(
                f"BS conjugator ({n}, {f}) fails {', '.join(failed)}"
            )
        return _found(u, v, BSElement(q, n, f), lengths, certificate, statistics)

    statistics["candidates_tried"] = s
    logger.debug("BS shift %d: no offset gives f in Z[1/%d]", s, q)
    return ConjugacyOutcome.not_conjugate(
        f"(qⁿQ - P) is not divisible by {divisor} for any offset",
        lengths=lengths,
        statistics=statistics,
    )


def bs_conjugacy(u: BSElement, v: BSElement) -> ConjugacyOutcome:
    """
    Decide conjugacy of u and v in BS(1, q).

    Outcome lengths are metric estimates: lower bounds for u and v and the
    upper bound for the witness, which is what the conjugator-length audit
    compares.

    Raises:
        InvalidArgument: u and v lie in groups with different q.
    """
    if u.q != v.q:
        raise InvalidArgument(
            f"cannot compare elements of BS(1,{u.q}) and BS(1,{v.q})"
        )
    lengths = _lengths(u, v)
    if u.n != v.n:
        return ConjugacyOutcome.not_conjugate(
            "shift parts differ", lengths=lengths
        )
    if u.n == 0:
        return _conjugacy_zero_shift(u, v, lengths)
    return _conjugacy_nonzero_shift(u, v, lengths)
