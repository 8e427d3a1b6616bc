"""
polycyclic/spec.py

Group specs for Zⁿ ⋊_φ Zᵏ: k commuting unimodular n×n integer matrices
φ_1, ..., φ_k, with φ(y) = Π φ_i^{y_i}.

Spec file (JSON): {"n": 2, "k": 1, "generators": [[[2, 1], [1, 1]]]}
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Any

import sympy
from django.core.exceptions import ValidationError

from exactnum.linalg import (
    IntMat,
    IntVec,
    charpoly,
    determinant,
    identity,
    int_matrix,
    mat_mul,
    mat_pow,
    poly_at_matrix,
    squarefree_part,
    unimodular_inverse,
)


class SpecError(ValidationError):
    """A spec violates one of the group conditions; the message names it."""


@dataclass(frozen=True)
class PCGroupSpec:
    n: int
    k: int
    generators: tuple[IntMat, ...]
    inverses: tuple[IntMat, ...] = field(compare=False, repr=False)
    semisimple: tuple[bool, ...] = field(compare=False)
    positive_real_spectrum: bool = field(compare=False)
    hyperbolic: bool | None = field(compare=False, default=None)

    def phi(self, y: Sequence[int]) -> IntMat:
        """φ(y) = Π φ_i^{y_i}."""
        return _phi(self, tuple(int(c) for c in y))

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "generators": [[list(row) for row in g] for g in self.generators],
        }


@lru_cache(maxsize=4096)
def _phi(spec: PCGroupSpec, y: IntVec) -> IntMat:
    result = identity(spec.n)
    for gen, inv, power in zip(spec.generators, spec.inverses, y):
        if power:
            result = mat_mul(result, mat_pow(gen, power, inv))
    return result


def _is_semisimple(matrix: IntMat) -> bool:
    # diagonalisable over C iff the squarefree part of the characteristic
    # polynomial already annihilates the matrix
    minimal = squarefree_part(charpoly(matrix))
    return poly_at_matrix(minimal, matrix).is_zero_matrix


def _has_positive_real_spectrum(matrix: IntMat) -> bool:
    poly = charpoly(matrix)
    roots = sympy.real_roots(poly)
    return len(roots) == poly.degree() and all(r.is_positive for r in roots)


def pc_validate_spec(
    raw: Sequence[Sequence[Sequence[int]]],
    n: int | None = None,
    k: int | None = None,
) -> PCGroupSpec:
    """
    Check and freeze a list of generator matrices.

    Accepts iff every generator is a square integer matrix of determinant
    ±1, the generators commute pairwise and each is semisimple. Records
    whether every generator has only positive real eigenvalues, and for
    n = 2, k = 1 whether the generator is hyperbolic (|trace| > 2).

    Raises:
        SpecError: naming the first violated condition.
    """
    if not raw:
        raise SpecError("a spec needs at least one generator", code="empty")
    try:
        generators = tuple(int_matrix(g) for g in raw)
    except (TypeError, ValueError) as exc:
        raise SpecError(f"generators must be integer matrices: {exc}",
                        code="malformed") from exc

    size = len(generators[0])
    for index, gen in enumerate(generators):
        if len(gen) != size or any(len(row) != size for row in gen):
            raise SpecError(
                f"generator {index} is not a {size}x{size} matrix",
                code="shape",
            )
    if n is not None and n != size:
        raise SpecError(f"declared n={n} but matrices are {size}x{size}",
                        code="shape")
    if k is not None and k != len(generators):
        raise SpecError(
            f"declared k={k} but {len(generators)} generators given",
            code="shape",
        )

    for index, gen in enumerate(generators):
        det = determinant(gen)
        if det not in (1, -1):
            raise SpecError(
                f"generator {index} is not unimodular (det {det})",
                code="not_unimodular",
            )
    for i, first in enumerate(generators):
        for j in range(i + 1, len(generators)):
            second = generators[j]
            if mat_mul(first, second) != mat_mul(second, first):
                raise SpecError(
                    f"generators {i} and {j} do not commute",
                    code="not_commuting",
                )
    semisimple = tuple(_is_semisimple(g) for g in generators)
    for index, ok in enumerate(semisimple):
        if not ok:
            raise SpecError(
                f"generator {index} is not semisimple (Jordan block)",
                code="not_semisimple",
            )

    hyperbolic = None
    if size == 2 and len(generators) == 1:
        hyperbolic = abs(generators[0][0][0] + generators[0][1][1]) > 2

    return PCGroupSpec(
        n=size,
        k=len(generators),
        generators=generators,
        inverses=tuple(unimodular_inverse(g) for g in generators),
        semisimple=semisimple,
        positive_real_spectrum=all(
            _has_positive_real_spectrum(g) for g in generators
        ),
        hyperbolic=hyperbolic,
    )


def spec_from_json(data: Any) -> PCGroupSpec:
    if not isinstance(data, dict) or "generators" not in data:
        raise SpecError(
            "spec must be an object with 'n', 'k' and 'generators'",
            code="malformed",
        )
    return pc_validate_spec(data["generators"], data.get("n"), data.get("k"))


def load_spec_file(path: str | Path) -> PCGroupSpec:
    """
    Read a JSON spec file.

    Raises:
        OSError: the file cannot be read.
        SpecError: the JSON is malformed or the matrices fail validation.
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"spec file is not valid JSON: {exc}",
                        code="malformed") from exc
    return spec_from_json(data)
