"""
lamplighter/services.py

Conjugacy in Z_q wr Z with short conjugators.

For u = (s, P), v = (r, Q) and a candidate γ = (n, f), u·γ = γ·v holds iff

    s + n = n + r      and      P + tˢ·f = f + tⁿ·Q.

So the shifts must agree. The returned conjugator always satisfies
|γ| ≤ 3(|u| + |v|); the check is recorded on the outcome certificate.
"""

from __future__ import annotations

import logging

from exactnum.exceptions import InvalidArgument
from exactnum.laurent import LaurentPoly
from exactnum.outcomes import ConjugacyOutcome

from .elements import LLElement, ll_inv, ll_mul
from .metric import ll_word_length

logger = logging.getLogger(__name__)

CONJUGATOR_CONSTANT = 3


def conjugator_bound(u: LLElement, v: LLElement) -> int:
    return CONJUGATOR_CONSTANT * (ll_word_length(u) + ll_word_length(v))


def _found(
    u: LLElement,
    v: LLElement,
    witness: LLElement,
    lengths: dict,
    certificate: dict,
    statistics: dict,
) -> ConjugacyOutcome:
    witness_length = ll_word_length(witness)
    bound = CONJUGATOR_CONSTANT * (lengths["u"] + lengths["v"])
    return ConjugacyOutcome.found(
        u,
        v,
        witness,
        ll_mul,
        certificate={**certificate, "length_bound": witness_length <= bound},
        lengths={**lengths, "witness": witness_length},
        statistics={**statistics, "bound": bound},
    )


def _conjugacy_zero_shift(
    u: LLElement, v: LLElement, lengths: dict
) -> ConjugacyOutcome:
    q, P, Q = u.q, u.f, v.f
    if not P and not Q:
        return _found(
            u, v, LLElement.identity(q), lengths, {}, {"case": "zero-shift"}
        )
    if not P or not Q:
        return ConjugacyOutcome.not_conjugate(
            "exactly one lamp configuration is zero",
            lengths=lengths,
            statistics={"case": "zero-shift"},
        )

    # supports can only line up for shifts inside this window
    low = int(P.v0 - Q.v0_minus)
    high = int(P.v0_minus - Q.v0)
    tried = 0
    for n in range(low, high + 1):
        tried += 1
        if Q.shift(n) == P:
            return _found(
                u,
                v,
                LLElement(q, n, LaurentPoly.zero(q)),
                lengths,
                {"configurations_shift_equal": True},
                {
                    "case": "zero-shift",
                    "window": [low, high],
                    "candidates_tried": tried,
                },
            )
    return ConjugacyOutcome.not_conjugate(
        "no shift of v's configuration equals u's",
        lengths=lengths,
        statistics={
            "case": "zero-shift",
            "window": [low, high],
            "candidates_tried": tried,
        },
    )


def _telescope(diff: LaurentPoly, s: int) -> LaurentPoly:
    """
    Solve λ_k - λ_{k-s} = a_k - b_{k-n} for a finitely supported λ.

    ``diff`` holds the right-hand side. Summing the recurrence down each
    residue class mod s gives λ_k = Σ_{j <= k, j ≡ k (mod s)} diff_j. Once
    the full class sums vanish, λ_k = 0 for k > v0⁻(diff) - s and for
    k < v0(diff), so only that range is filled in.
    """
    q = diff.modulus
    if not diff:
        return LaurentPoly.zero(q)
    coeffs = diff.as_dict()
    lam: dict[int, int] = {}
    for k in range(int(diff.v0), int(diff.v0_minus) - s + 1):
        lam[k] = (coeffs.get(k, 0) + lam.get(k - s, 0)) % q
    return LaurentPoly(q, lam)


def _conjugacy_nonzero_shift(
    u: LLElement, v: LLElement, lengths: dict
) -> ConjugacyOutcome:
    q = u.q
    inverted = u.n < 0
    # a conjugator of u⁻¹, v⁻¹ also conjugates u, v
    a, b = (ll_inv(u), ll_inv(v)) if inverted else (u, v)
    s, P, Q = a.n, a.f, b.f

    best: tuple[int, int, LLElement] | None = None
    valid = 0
    for n in range(s):
        diff = P - Q.shift(n)
        if any(diff.residue_class_sums(s).values()):
            continue
        valid += 1
        candidate = LLElement(q, n, _telescope(diff, s))
        length = ll_word_length(candidate)
        if best is None or length < best[0]:
            best = (length, n, candidate)

    statistics = {
        "case": "nonzero-shift",
        "normalized_shift": s,
        "inverted": inverted,
        "candidates_tried": s,
        "candidates_valid": valid,
    }
    logger.debug("lamplighter shift %d: %d of %d offsets valid", s, valid, s)
    if best is None:
        return ConjugacyOutcome.not_conjugate(
            "a residue-class sum is nonzero for every offset",
            lengths=lengths,
            statistics=statistics,
        )

    _, n, witness = best
    f = witness.f
    certificate = {
        "residue_sums_vanish": True,
        "valuation_window": (
            f.v0 >= min(P.v0, Q.v0 + n)
            and f.v0_minus <= max(P.v0_minus - s, Q.v0_minus + n - s)
        ),
    }
    return _found(u, v, witness, lengths, certificate, statistics)


def ll_conjugacy(u: LLElement, v: LLElement) -> ConjugacyOutcome:
    """
    Decide whether u and v are conjugate and build a short conjugator.

    Equal zero shifts: conjugate iff P = tⁿQ, witness (n, 0). Equal
    nonzero shifts: normalise to s > 0 through inverses and, for each
    offset n in [0, s), solve the lamp equation by telescoping; the
    shortest solution wins, ties going to the smaller n.

    Raises:
        InvalidArgument: u and v lie in lamplighter groups with different q.
    """
    if u.q != v.q:
        raise InvalidArgument(
            f"cannot compare elements of Z_{u.q} wr Z and Z_{v.q} wr Z"
        )
    lengths = {"u": ll_word_length(u), "v": ll_word_length(v)}
    if u.n != v.n:
        return ConjugacyOutcome.not_conjugate(
            "shift parts differ", lengths=lengths
        )
    if u.n == 0:
        return _conjugacy_zero_shift(u, v, lengths)
    return _conjugacy_nonzero_shift(u, v, lengths)
