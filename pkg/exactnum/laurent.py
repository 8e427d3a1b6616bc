"""
exactnum/laurent.py

Laurent polynomials over Z_q, i.e. finitely supported lamp configurations.

A polynomial is stored as a sorted tuple of ``(exponent, coefficient)``
pairs with coefficients in [1, q). The zero polynomial has empty support;
its valuation is ``+inf`` and its top exponent ``-inf``.

Text grammar: comma-separated ``coeff@exp`` terms, e.g. ``1@0,1@2`` is
1 + t². The empty string is zero. Coefficients are reduced mod q and
repeated exponents are summed.
"""

from __future__ import annotations

import math
import re
from collections.abc import Iterable, Iterator, Mapping
from typing import Union

from .exceptions import GrammarError, InvalidArgument
from .residue import Residue

Terms = Union[Mapping[int, int], Iterable[tuple[int, int]]]

_TERM_RE = re.compile(r"^\s*(-?\d+)\s*@\s*(-?\d+)\s*$")


class LaurentPoly:
    """Immutable element of Z_q[t, t⁻¹]."""

    __slots__ = ("modulus", "_terms")

    modulus: int
    _terms: tuple[tuple[int, int], ...]

    def __init__(self, modulus: int, terms: Terms = ()) -> None:
        if modulus < 2:
            raise InvalidArgument(f"modulus must be >= 2, got {modulus}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, coeff in items:
            acc[int(exp)] = (acc.get(int(exp), 0) + int(coeff)) % modulus
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(
            self,
            "_terms",
            tuple(sorted((e, c) for e, c in acc.items() if c)),
        )

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LaurentPoly is immutable")

    def __reduce__(self):
        return (LaurentPoly, (self.modulus, self._terms))

    @classmethod
    def zero(cls, modulus: int) -> LaurentPoly:
        return cls(modulus)

    @classmethod
    def monomial(cls, modulus: int, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls(modulus, ((exp, coeff),))

    # ------------------------------------------------------------------
    # inspection

    def items(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def support(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self._terms)

    def coefficient(self, exp: int) -> Residue:
        for e, c in self._terms:
            if e == exp:
                return Residue(c, self.modulus)
        return Residue(0, self.modulus)

    def as_dict(self) -> dict[int, int]:
        return dict(self._terms)

    @property
    def v0(self) -> int | float:
        """Lowest exponent with a nonzero coefficient (``inf`` for zero)."""
        return self._terms[0][0] if self._terms else math.inf

    @property
    def v0_minus(self) -> int | float:
        """Highest exponent with a nonzero coefficient (``-inf`` for zero)."""
        return self._terms[-1][0] if self._terms else -math.inf

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.modulus == other.modulus and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.modulus, self._terms))

    # ------------------------------------------------------------------
    # arithmetic

    def _check(self, other: LaurentPoly) -> None:
        if other.modulus != self.modulus:
            raise InvalidArgument(
                f"cannot combine polynomials over Z_{self.modulus} "
                f"and Z_{other.modulus}"
            )

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        self._check(other)
        return LaurentPoly(self.modulus, self._terms + other._terms)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.modulus, ((e, -c) for e, c in self._terms))

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        self._check(other)
        return LaurentPoly(
            self.modulus,
            self._terms + tuple((e, -c) for e, c in other._terms),
        )

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly(
                self.modulus, ((e, c * other) for e, c in self._terms)
            )
        self._check(other)
        return LaurentPoly(
            self.modulus,
            (
                (e1 + e2, c1 * c2)
                for e1, c1 in self._terms
                for e2, c2 in other._terms
            ),
        )

    __rmul__ = __mul__

    def shift(self, n: int) -> LaurentPoly:
        """Return tⁿ·f."""
        if n == 0 or not self._terms:
            return self
        return LaurentPoly(self.modulus, ((e + n, c) for e, c in self._terms))

    def truncate(
        self, lower: int | None = None, upper: int | None = None
    ) -> LaurentPoly:
        """Keep the terms with ``lower <= exp < upper`` (either end open)."""
        return LaurentPoly(
            self.modulus,
            (
                (e, c)
                for e, c in self._terms
                if (lower is None or e >= lower)
                and (upper is None or e < upper)
            ),
        )

    def residue_class_sums(self, s: int) -> dict[int, int]:
        """Sum of coefficients in each exponent class mod ``s`` (zeros kept)."""
        if s <= 0:
            raise InvalidArgument(f"class count must be positive, got {s}")
        sums = dict.fromkeys(range(s), 0)
        for e, c in self._terms:
            sums[e % s] = (sums[e % s] + c) % self.modulus
        return sums

    # ------------------------------------------------------------------
    # text grammar

    @classmethod
    def parse(cls, text: str, modulus: int) -> LaurentPoly:
        text = (text or "").strip()
        if not text:
            return cls(modulus)
        terms = []
        for chunk in text.split(","):
            match = _TERM_RE.match(chunk)
            if match is None:
                raise GrammarError(
                    f"bad Laurent term {chunk!r}: expected comma-separated "
                    "coeff@exp terms such as '1@0,1@2'"
                )
            terms.append((int(match.group(2)), int(match.group(1))))
        return cls(modulus, terms)

    def __str__(self) -> str:
        return ",".join(f"{c}@{e}" for e, c in self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.modulus}, {dict(self._terms)!r})"
