"""
oracle/box.py

Exhaustive conjugator search in Zⁿ ⋊ Zᵏ over a box of candidates
‖x‖∞ ≤ X, ‖y‖∞ ≤ Y. Word lengths are not available for these groups at
any useful radius, so the oracle searches coordinates instead.
"""

from __future__ import annotations

import itertools

import numpy as np

from exactnum.conf import forge_setting
from exactnum.exceptions import InternalInvariantError, InvalidArgument
from exactnum.linalg import identity, mat_sub, mat_vec, vec_sub
from polycyclic.elements import PCElement, check_element, pc_mul
from polycyclic.spec import PCGroupSpec

from .cayley import BruteResult

MAX_GRID_POINTS = 10**7
# products below this stay exact in int64
INT64_SAFE = 2**62


def box_conjugator_search(
    u: PCElement,
    v: PCElement,
    spec: PCGroupSpec,
    x_bound: int | None = None,
    y_bound: int | None = None,
) -> BruteResult:
    """
    First (x, y) in lexicographic order of y, then x, with u·(x, y) = (x, y)·v.

    For each y the 2X+1 grid of x is tested at once: the identity
    (Id − φ(b))x = a_u − φ(y)a_v is evaluated for the whole grid as one
    integer matrix product. Grids whose products could leave int64 fall
    back to Python integers.
    """
    check_element(u, spec)
    check_element(v, spec)
    x_bound = forge_setting("PC_BOX_WINDOW") if x_bound is None else x_bound
    y_bound = forge_setting("PC_BOX_SHIFT") if y_bound is None else y_bound
    if (2 * x_bound + 1) ** spec.n > MAX_GRID_POINTS:
        raise InvalidArgument(
            f"x grid of {(2 * x_bound + 1) ** spec.n} points is too large"
        )
    searched = 0
    if u.b != v.b:
        return BruteResult(None, None, x_bound, False, searched)

    lhs_ints = mat_sub(identity(spec.n), spec.phi(u.b))
    reach = x_bound * max(sum(abs(c) for c in row) for row in lhs_ints)
    dtype = np.int64 if reach < INT64_SAFE else object
    lhs = np.array(lhs_ints, dtype=dtype)
    axis = np.array(range(-x_bound, x_bound + 1), dtype=dtype)
    grid = np.stack(
        np.meshgrid(*([axis] * spec.n), indexing="ij"), axis=-1
    ).reshape(-1, spec.n)
    images = grid @ lhs.T

    for y in itertools.product(range(-y_bound, y_bound + 1), repeat=spec.k):
        rhs_ints = vec_sub(u.a, mat_vec(spec.phi(y), v.a))
        if max(map(abs, rhs_ints)) > reach:
            searched += len(grid)
            continue
        rhs = np.array(rhs_ints, dtype=dtype)
        hits = np.flatnonzero(np.all(images == rhs, axis=1))
        if hits.size:
            searched += int(hits[0]) + 1
            x = tuple(int(c) for c in grid[hits[0]])
            witness = PCElement(x, tuple(y))
            if pc_mul(u, witness, spec) != pc_mul(witness, v, spec):
                raise InternalInvariantError(f"box witness {witness} fails")
            return BruteResult(witness, None, x_bound, False, searched)
        searched += len(grid)
    return BruteResult(None, None, x_bound, False, searched)
