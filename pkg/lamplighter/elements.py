"""
lamplighter/elements.py

Elements of Z_q wr Z as affine matrices (tⁿ, f; 0, 1) over Z_q[t, t⁻¹].
An element is the pair (n, f); the product is

    (n1, f1)·(n2, f2) = (n1 + n2, f1 + t^n1·f2).
"""

from __future__ import annotations

from dataclasses import dataclass

from exactnum.exceptions import GrammarError, InvalidArgument
from exactnum.laurent import LaurentPoly


@dataclass(frozen=True, slots=True)
class LLElement:
    q: int
    n: int
    f: LaurentPoly

    def __post_init__(self) -> None:
        if self.f.modulus != self.q:
            raise InvalidArgument(
                f"lamp configuration is over Z_{self.f.modulus}, "
                f"element is in Z_{self.q} wr Z"
            )

    @classmethod
    def identity(cls, q: int) -> LLElement:
        return cls(q, 0, LaurentPoly.zero(q))

    @classmethod
    def make(cls, q: int, n: int, terms=()) -> LLElement:
        return cls(q, n, LaurentPoly(q, terms))

    @classmethod
    def parse(cls, text: str, q: int) -> LLElement:
        """Parse ``"n;f"``, e.g. ``"-1;1@0,1@2"``."""
        shift, sep, config = (text or "").partition(";")
        try:
            n = int(shift.strip())
        except ValueError:
            n = None
        if not sep or n is None:
            raise GrammarError(
                f"bad lamplighter element {text!r}: expected 'n;f' with f "
                "in coeff@exp form, e.g. '1;1@0'"
            )
        return cls(q, n, LaurentPoly.parse(config, q))

    def __str__(self) -> str:
        return f"{self.n};{self.f}"


def _same_group(g1: LLElement, g2: LLElement) -> None:
    if g1.q != g2.q:
        raise InvalidArgument(
            f"elements of Z_{g1.q} wr Z and Z_{g2.q} wr Z cannot be combined"
        )


def ll_mul(g1: LLElement, g2: LLElement) -> LLElement:
    _same_group(g1, g2)
    return LLElement(g1.q, g1.n + g2.n, g1.f + g2.f.shift(g1.n))


def ll_inv(g: LLElement) -> LLElement:
    return LLElement(g.q, -g.n, -g.f.shift(-g.n))


def ll_generators(q: int) -> tuple[LLElement, ...]:
    """The symmetric set {(1, b)} ∪ {(1, b)⁻¹} for b ∈ Z_q."""
    forward = tuple(
        LLElement(q, 1, LaurentPoly.monomial(q, 0, b)) for b in range(q)
    )
    return forward + tuple(ll_inv(s) for s in forward)
