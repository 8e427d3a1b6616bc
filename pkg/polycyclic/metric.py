"""
polycyclic/metric.py

Length estimates for Zⁿ ⋊ Zᵏ. The Zⁿ factor is exponentially distorted
for hyperbolic φ, so ‖a‖ only contributes logarithmically.
"""

from __future__ import annotations

import math

from exactnum.linalg import l1_norm, sup_norm

from .eigen import joint_eigenbasis
from .elements import PCElement, check_element
from .spec import PCGroupSpec


def pc_length_est(g: PCElement, spec: PCGroupSpec) -> float:
    """‖b‖₁ + log₂(1 + ‖a‖∞); zero exactly at the identity."""
    check_element(g, spec)
    return l1_norm(g.b) + math.log2(1 + sup_norm(g.a))


def witness_norm_inequality(
    u: PCElement, w: PCElement, witness: PCElement, spec: PCGroupSpec
) -> tuple[float, float]:
    """
    Both sides of ‖x‖ ≤ (λ^|v| + 1)(‖u‖ + λʸ‖w‖) for k = 1.

    Norms are eigenbasis sup-norms of the Zⁿ parts; λ is the largest
    eigenvalue modulus of the generator and y the witness exponent.
    """
    data = joint_eigenbasis(spec)
    lam = float(abs(data.eigenvalues[:, 0]).max())
    shift = abs(u.b[0])
    y = witness.b[0]
    lhs = data.sup_norm(witness.a)
    rhs = (lam ** shift + 1) * (data.sup_norm(u.a) + lam ** y * data.sup_norm(w.a))
    return lhs, rhs
