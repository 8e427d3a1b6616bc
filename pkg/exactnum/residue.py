"""
exactnum/residue.py

Residues modulo q, the coefficient ring of lamp configurations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import InvalidArgument


@dataclass(frozen=True, slots=True)
class Residue:
    """An element of Z_q stored as its representative in [0, q)."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise InvalidArgument(f"modulus must be >= 2, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _check(self, other: Residue) -> None:
        if other.modulus != self.modulus:
            raise InvalidArgument(
                f"residues mod {self.modulus} and mod {other.modulus} "
                "cannot be combined"
            )

    def __add__(self, other: Residue) -> Residue:
        self._check(other)
        return Residue(self.value + other.value, self.modulus)

    def __sub__(self, other: Residue) -> Residue:
        self._check(other)
        return Residue(self.value - other.value, self.modulus)

    def __mul__(self, other: Residue) -> Residue:
        self._check(other)
        return Residue(self.value * other.value, self.modulus)

    def __neg__(self) -> Residue:
        return Residue(-self.value, self.modulus)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value
