"""
polycyclic/elements.py

Elements (a, b) of Zⁿ ⋊_φ Zᵏ with the product

    (a₁, b₁)·(a₂, b₂) = (a₁ + φ(b₁)a₂, b₁ + b₂).

Text grammar: ``a1,...,an;b1,...,bk``, e.g. ``2,1;0``.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from typing import Any

from exactnum.exceptions import GrammarError, InvalidArgument
from exactnum.linalg import IntVec, int_vector, mat_vec, vec_add, vec_neg, zero_vector

from .spec import PCGroupSpec

ELEMENT_GRAMMAR = "a1,...,an;b1,...,bk (comma-separated integers)"


@dataclass(frozen=True, slots=True)
class PCElement:
    a: IntVec
    b: IntVec

    @classmethod
    def make(cls, a: Sequence[int], b: Sequence[int]) -> PCElement:
        return cls(int_vector(a), int_vector(b))

    @classmethod
    def parse(cls, text: str) -> PCElement:
        head, sep, tail = text.strip().partition(";")
        if not sep:
            raise GrammarError(f"expected {ELEMENT_GRAMMAR}, got {text!r}")
        try:
            return cls.make(_int_list(head), _int_list(tail))
        except ValueError as exc:
            raise GrammarError(
                f"expected {ELEMENT_GRAMMAR}, got {text!r}"
            ) from exc

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> PCElement:
        try:
            return cls.make(data["a"], data["b"])
        except (KeyError, TypeError, ValueError) as exc:
            raise GrammarError(
                'polycyclic element must look like {"a": [..], "b": [..]}'
            ) from exc

    def to_json(self) -> dict[str, list[int]]:
        return {"a": list(self.a), "b": list(self.b)}

    def __str__(self) -> str:
        return f"{','.join(map(str, self.a))};{','.join(map(str, self.b))}"


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(part) for part in text.split(",")]


def check_element(g: PCElement, spec: PCGroupSpec) -> None:
    if len(g.a) != spec.n or len(g.b) != spec.k:
        raise InvalidArgument(
            f"element {g} does not fit a spec with n={spec.n}, k={spec.k}"
        )


def pc_identity(spec: PCGroupSpec) -> PCElement:
    return PCElement(zero_vector(spec.n), zero_vector(spec.k))


def pc_mul(g1: PCElement, g2: PCElement, spec: PCGroupSpec) -> PCElement:
    check_element(g1, spec)
    check_element(g2, spec)
    return PCElement(
        vec_add(g1.a, mat_vec(spec.phi(g1.b), g2.a)),
        vec_add(g1.b, g2.b),
    )


def pc_inv(g: PCElement, spec: PCGroupSpec) -> PCElement:
    check_element(g, spec)
    minus_b = vec_neg(g.b)
    return PCElement(vec_neg(mat_vec(spec.phi(minus_b), g.a)), minus_b)


def pc_generators(spec: PCGroupSpec) -> list[PCElement]:
    """Standard basis vectors of Zⁿ and Zᵏ with their inverses."""
    gens = []
    for size, place in ((spec.n, "a"), (spec.k, "b")):
        for i in range(size):
            for sign in (1, -1):
                unit = tuple(sign * int(i == j) for j in range(size))
                zeros_a, zeros_b = zero_vector(spec.n), zero_vector(spec.k)
                gens.append(
                    PCElement(unit, zeros_b) if place == "a"
                    else PCElement(zeros_a, unit)
                )
    return gens
