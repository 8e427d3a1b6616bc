"""
bs/hyperbolic.py

Upper half plane geometry for the treebolic space of BS(1, q).

Points are Python complex numbers with positive imaginary part. The raw
distance is the standard hyperbolic metric; the rescaled one divides by
log q so that the horocycles Im z = 1 and Im z = qʳ are r apart.
"""

from __future__ import annotations

import math

from exactnum.exceptions import InvalidArgument
from exactnum.qfraction import QFraction

from .elements import BSElement


def hyp_dist(z1: complex, z2: complex) -> float:
    """
    arccosh(1 + |z1 - z2|² / (2·y1·y2)).

    Evaluated as 2·asinh(|z1 - z2| / (2√(y1·y2))), the same value without
    cancellation near 0 or overflow far away.
    """
    if z1.imag <= 0 or z2.imag <= 0:
        raise InvalidArgument("points must lie in the upper half plane")
    return 2.0 * math.asinh(abs(z1 - z2) / (2.0 * math.sqrt(z1.imag * z2.imag)))


def hyp_dist_rescaled(z1: complex, z2: complex, q: int) -> float:
    return hyp_dist(z1, z2) / math.log(q)


def act_on_plane(g: BSElement, z: complex) -> complex:
    """γ·z = qⁿz + f."""
    return float(g.q) ** g.n * z + float(g.f)


def log_valuation_chain(f: QFraction) -> tuple[float, float, float]:
    """
    Return (lower, d, upper) for d = d_hyp(i, i + f) = arccosh(1 + f²/2):

        (log q - log √2)·max{v0(f), 0} <= d <= 2·log(1 + |f|).
    """
    value = float(f)
    v0 = f.v0 if f else 0
    lower = (math.log(f.base) - math.log(math.sqrt(2.0))) * max(v0, 0)
    d = hyp_dist(1j, complex(value, 1.0))
    upper = 2.0 * math.log1p(abs(value))
    return float(lower), d, upper
