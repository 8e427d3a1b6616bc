"""
polycyclic/eigen.py

Numerical joint eigenbasis of the commuting generators.

Nothing here decides anything: the eigen-coordinates only propose
candidate exponents and evaluate the norm inequalities reported by
audits. Every acceptance is checked again with integer matrices.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .spec import PCGroupSpec

ZERO_TOLERANCE = 1e-9


@dataclass(frozen=True)
class EigenData:
    basis: np.ndarray            # columns are joint eigenvectors
    basis_inv: np.ndarray
    eigenvalues: np.ndarray      # eigenvalues[j, i] of generator i on vector j
    log_moduli: np.ndarray       # log |eigenvalues|
    condition: float

    def coordinates(self, vec: Sequence[int | float]) -> np.ndarray:
        return self.basis_inv @ np.asarray(vec, dtype=float)

    def sup_norm(self, vec: Sequence[int | float]) -> float:
        """Sup-norm of ``vec`` measured in the eigenbasis."""
        coords = self.coordinates(vec)
        return float(np.max(np.abs(coords))) if coords.size else 0.0

    def support(self, vec: Sequence[int | float]) -> np.ndarray:
        """Indices of eigen-coordinates that are numerically nonzero."""
        coords = np.abs(self.coordinates(vec))
        scale = 1.0 + float(np.max(np.abs(np.asarray(vec, dtype=float)), initial=0.0))
        return np.flatnonzero(coords > ZERO_TOLERANCE * scale * self.condition)

    def min_log_modulus(self, generator: int = 0) -> float:
        """Smallest |log λ| of one generator that is bounded away from 0."""
        logs = np.abs(self.log_moduli[:, generator])
        logs = logs[logs > ZERO_TOLERANCE]
        return float(logs.min()) if logs.size else 0.0


@lru_cache(maxsize=64)
def joint_eigenbasis(spec: PCGroupSpec) -> EigenData:
    """
    Diagonalise all generators at once.

    Commuting semisimple matrices share an eigenbasis; a generic real
    combination of them has simple spectrum, so its eigenvectors serve for
    every generator.
    """
    mats = [np.asarray(g, dtype=float) for g in spec.generators]
    combined = sum(np.sqrt(i + 2.0) * m for i, m in enumerate(mats))
    _, basis = np.linalg.eig(combined)
    if spec.positive_real_spectrum:
        basis = np.real_if_close(basis, tol=1e6)
    basis_inv = np.linalg.inv(basis)
    eigenvalues = np.column_stack(
        [np.diag(basis_inv @ m @ basis) for m in mats]
    )
    if spec.positive_real_spectrum:
        eigenvalues = np.real(eigenvalues)
    return EigenData(
        basis=basis,
        basis_inv=basis_inv,
        eigenvalues=eigenvalues,
        log_moduli=np.log(np.abs(eigenvalues)),
        condition=float(np.linalg.cond(basis)),
    )
