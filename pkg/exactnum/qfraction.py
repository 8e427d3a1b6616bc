"""
exactnum/qfraction.py

Elements of Z[1/q] held in the canonical form a·q⁻ᵏ with q ∤ a.

Text grammar: ``a/q^k`` or a bare integer. The base in the text must be
the group's q; printing uses the bare integer form whenever k ≤ 0.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .exceptions import GrammarError, InvalidArgument, NotDivisible

_QFRAC_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*\^\s*(-?\d+))?\s*$")


class QFraction:
    """Immutable a·q⁻ᵏ; canonical, so equality is structural."""

    __slots__ = ("base", "numerator", "exponent")

    base: int
    numerator: int
    exponent: int

    def __init__(self, numerator: int, exponent: int = 0, base: int = 2):
        if base < 2:
            raise InvalidArgument(f"base must be >= 2, got {base}")
        a, k = int(numerator), int(exponent)
        if a == 0:
            k = 0
        else:
            while a % base == 0:
                a //= base
                k -= 1
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "numerator", a)
        object.__setattr__(self, "exponent", k)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QFraction is immutable")

    def __reduce__(self):
        return (QFraction, (self.numerator, self.exponent, self.base))

    @classmethod
    def zero(cls, base: int) -> QFraction:
        return cls(0, 0, base)

    @classmethod
    def from_int(cls, value: int, base: int) -> QFraction:
        return cls(value, 0, base)

    @property
    def v0(self) -> int | float:
        """q-adic valuation; ``inf`` for zero."""
        return math.inf if self.numerator == 0 else -self.exponent

    def q_free_part(self) -> int:
        """The signed numerator a, which carries no factor of q."""
        return self.numerator

    def _check(self, other: QFraction) -> None:
        if other.base != self.base:
            raise InvalidArgument(
                f"cannot combine Z[1/{self.base}] and Z[1/{other.base}]"
            )

    def __add__(self, other: QFraction) -> QFraction:
        self._check(other)
        k = max(self.exponent, other.exponent)
        q = self.base
        a = (
            self.numerator * q ** (k - self.exponent)
            + other.numerator * q ** (k - other.exponent)
        )
        return QFraction(a, k, q)

    def __neg__(self) -> QFraction:
        return QFraction(-self.numerator, self.exponent, self.base)

    def __sub__(self, other: QFraction) -> QFraction:
        return self + (-other)

    def __mul__(self, other: QFraction | int) -> QFraction:
        if isinstance(other, int):
            return QFraction(self.numerator * other, self.exponent, self.base)
        self._check(other)
        return QFraction(
            self.numerator * other.numerator,
            self.exponent + other.exponent,
            self.base,
        )

    __rmul__ = __mul__

    def scale(self, m: int) -> QFraction:
        """Return qᵐ·x."""
        if self.numerator == 0:
            return self
        return QFraction(self.numerator, self.exponent - m, self.base)

    def __bool__(self) -> bool:
        return self.numerator != 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QFraction):
            return NotImplemented
        return (self.base, self.numerator, self.exponent) == (
            other.base,
            other.numerator,
            other.exponent,
        )

    def __hash__(self) -> int:
        return hash((self.base, self.numerator, self.exponent))

    def to_fraction(self) -> Fraction:
        if self.exponent >= 0:
            return Fraction(self.numerator, self.base**self.exponent)
        return Fraction(self.numerator * self.base ** (-self.exponent))

    def __float__(self) -> float:
        return float(self.to_fraction())

    @classmethod
    def parse(cls, text: str, base: int) -> QFraction:
        match = _QFRAC_RE.match(text or "")
        if match is None:
            raise GrammarError(
                f"bad Z[1/q] value {text!r}: expected 'a/q^k' or an integer"
            )
        numerator = int(match.group(1))
        if match.group(2) is None:
            return cls(numerator, 0, base)
        if int(match.group(2)) != base:
            raise GrammarError(
                f"bad Z[1/q] value {text!r}: denominator base must be {base}"
            )
        return cls(numerator, int(match.group(3)), base)

    def __str__(self) -> str:
        if self.exponent > 0:
            return f"{self.numerator}/{self.base}^{self.exponent}"
        return str(self.numerator * self.base ** (-self.exponent))

    def __repr__(self) -> str:
        return (
            f"QFraction({self.numerator}, {self.exponent}, base={self.base})"
        )


def qfrac_normalize(a: int, k: int, q: int) -> QFraction:
    """Canonical form of a·q⁻ᵏ."""
    return QFraction(a, k, q)


def exact_divide(x: QFraction, m: int) -> QFraction:
    """
    Return x/m when it lies in Z[1/q].

    ``m`` must be nonzero and coprime to q; then x/m ∈ Z[1/q] exactly when
    m divides the numerator of x.

    Raises:
        InvalidArgument: m is zero or shares a factor with q.
        NotDivisible: m does not divide the numerator.
    """
    if m == 0 or math.gcd(m, x.base) != 1:
        raise InvalidArgument(
            f"divisor {m} must be nonzero and coprime to q={x.base}"
        )
    quotient, remainder = divmod(x.numerator, m)
    if remainder:
        raise NotDivisible(f"{m} does not divide {x}")
    return QFraction(quotient, x.exponent, x.base)
