"""
bs/elements.py

BS(1, q) = <a, b | a b a⁻¹ = b^q> as affine matrices (qⁿ, f; 0, 1) with f
in Z[1/q]. The product is

    (n1, f1)·(n2, f2) = (n1 + n2, f1 + q^n1·f2),

with a = (1, 0) and b = (0, 1).
"""

from __future__ import annotations

from dataclasses import dataclass

from exactnum.exceptions import GrammarError, InvalidArgument
from exactnum.qfraction import QFraction


@dataclass(frozen=True, slots=True)
class BSElement:
    q: int
    n: int
    f: QFraction

    def __post_init__(self) -> None:
        if self.f.base != self.q:
            raise InvalidArgument(
                f"translation part lies in Z[1/{self.f.base}], element is in "
                f"BS(1,{self.q})"
            )

    @classmethod
    def identity(cls, q: int) -> BSElement:
        return cls(q, 0, QFraction.zero(q))

    @classmethod
    def make(cls, q: int, n: int, numerator: int = 0, exponent: int = 0):
        return cls(q, n, QFraction(numerator, exponent, q))

    @classmethod
    def parse(cls, text: str, q: int) -> BSElement:
        """Parse ``"n;f"``, e.g. ``"1;3/2^2"``."""
        shift, sep, translation = (text or "").partition(";")
        try:
            n = int(shift.strip())
        except ValueError:
            n = None
        if not sep or n is None:
            raise GrammarError(
                f"bad BS element {text!r}: expected 'n;f' with f as 'a/q^k' "
                "or an integer, e.g. '1;3/2^2'"
            )
        return cls(q, n, QFraction.parse(translation, q))

    def __str__(self) -> str:
        return f"{self.n};{self.f}"


def bs_mul(g1: BSElement, g2: BSElement) -> BSElement:
    if g1.q != g2.q:
        raise InvalidArgument(
            f"elements of BS(1,{g1.q}) and BS(1,{g2.q}) cannot be combined"
        )
    return BSElement(g1.q, g1.n + g2.n, g1.f + g2.f.scale(g1.n))


def bs_inv(g: BSElement) -> BSElement:
    return BSElement(g.q, -g.n, -g.f.scale(-g.n))


def bs_generators(q: int) -> tuple[BSElement, ...]:
    """a, a⁻¹, b, b⁻¹."""
    a = BSElement.make(q, 1)
    b = BSElement.make(q, 0, 1)
    return (a, bs_inv(a), b, bs_inv(b))
