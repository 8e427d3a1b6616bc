"""
forge/sampling.py

Random elements with sizes tied to a length budget L.

- lamplighter: shift uniform in [-L, L]; up to L lamps at distinct
  positions drawn from [-L, L] with nonzero coefficients.
- Baumslag-Solitar: shift in [-⌈L/4⌉, ⌈L/4⌉], numerator with
  |a| ≤ 2^⌈L/2⌉, denominator exponent in [0, 3].
- polycyclic: ‖a‖∞ ≤ 4L + 2 and ‖b‖∞ ≤ ⌊L/2⌋.

Every draw goes through the ``random.Random`` passed in, so a sample is a
pure function of the generator state.
"""

from __future__ import annotations

import math
from random import Random
from typing import Any

from bs.elements import BSElement
from exactnum.laurent import LaurentPoly
from lamplighter.elements import LLElement
from oracle.generating_sets import Family
from polycyclic.elements import PCElement

from .services import GroupContext


def sample_rng(seed: int, index: int) -> Random:
    """Independent stream for sample ``index``, whatever the worker count."""
    return Random(f"{seed}:{index}")


def sample_lamplighter(rng: Random, q: int, max_len: int) -> LLElement:
    n = rng.randint(-max_len, max_len)
    count = rng.randint(0, max_len)
    positions = rng.sample(range(-max_len, max_len + 1), count)
    terms = {p: rng.randint(1, q - 1) for p in sorted(positions)}
    return LLElement(q, n, LaurentPoly(q, terms))


def sample_bs(rng: Random, q: int, max_len: int) -> BSElement:
    shift_range = math.ceil(max_len / 4)
    numerator_range = 2 ** math.ceil(max_len / 2)
    return BSElement.make(
        q,
        rng.randint(-shift_range, shift_range),
        rng.randint(-numerator_range, numerator_range),
        rng.randint(0, 3),
    )


def sample_pc(rng: Random, n: int, k: int, max_len: int) -> PCElement:
    a_range = 4 * max_len + 2
    b_range = max_len // 2
    return PCElement.make(
        [rng.randint(-a_range, a_range) for _ in range(n)],
        [rng.randint(-b_range, b_range) for _ in range(k)],
    )


def sample_element(ctx: GroupContext, rng: Random, max_len: int) -> Any:
    if ctx.family is Family.LAMPLIGHTER:
        return sample_lamplighter(rng, ctx.q, max_len)
    if ctx.family is Family.BAUMSLAG_SOLITAR:
        return sample_bs(rng, ctx.q, max_len)
    return sample_pc(rng, ctx.spec.n, ctx.spec.k, max_len)


def sample_conjugate_pair(
    ctx: GroupContext, rng: Random, max_len: int
) -> tuple[Any, Any, Any]:
    """(u, γ, v) with v = γ⁻¹uγ, so γ conjugates u to v."""
    u = sample_element(ctx, rng, max_len)
    gamma = sample_element(ctx, rng, max_len)
    return u, gamma, ctx.conjugate_by(u, gamma)
