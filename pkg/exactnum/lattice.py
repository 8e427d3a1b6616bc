"""
exactnum/lattice.py

Integer lattices A·Zᵐ held in row echelon form, for exact membership
tests and integer preimages when A may be singular.

Every stored row is ``[A z | z]`` for some z ∈ Zᵐ: the first ``dim``
entries are the lattice vector, the tail records how it was combined from
the generators. Pivots only ever sit in the first ``dim`` columns; rows
that reduce to zero there leave their tail in ``kernel``; those tails
form a basis of the integer kernel {z : A z = 0}.
"""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Sequence

from .linalg import IntMat, IntVec


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (x, y, g) with x·a + y·b == g == ±gcd(a, b)."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    return x, y, g


class IntLattice:
    """The lattice spanned by the columns of an integer matrix."""

    __slots__ = ("dim", "rank_bound", "basis", "pivot_rows", "pivot_cols", "kernel")

    def __init__(self, dim: int, generator_count: int) -> None:
        self.dim = dim
        self.rank_bound = generator_count
        self.basis: list[list[int]] = []
        # pivot_cols[j] is the basis row whose leading entry sits in column j
        self.pivot_cols: list[int | None] = [None] * dim
        self.pivot_rows: list[int] = []
        self.kernel: list[IntVec] = []

    @classmethod
    def column_span(cls, a: IntMat) -> IntLattice:
        """Lattice A·Zᵐ of an n×m matrix."""
        n, m = len(a), len(a[0])
        lattice = cls(n, m)
        for j in range(m):
            column = [a[i][j] for i in range(n)]
            tail = [int(i == j) for i in range(m)]
            lattice._add(column + tail)
        return lattice

    def _add(self, vec: list[int]) -> None:
        basis = self.basis
        width = len(vec)
        for j in filter(vec.__getitem__, range(self.dim)):
            p = self.pivot_cols[j]
            if p is None:
                where = bisect_left(self.pivot_rows, j)
                basis.insert(where, vec)
                self.pivot_rows.insert(where, j)
                for ii in range(where, len(basis)):
                    self.pivot_cols[self.pivot_rows[ii]] = ii
                return
            row = basis[p]
            a, b = row[j], vec[j]
            if b % a == 0:
                q = b // a
                for jj in range(j, width):
                    vec[jj] -= q * row[jj]
            elif a % b == 0:
                row[j:], vec[j:] = vec[j:], row[j:]
                q = a // b
                for jj in range(j, width):
                    vec[jj] -= q * row[jj]
            else:
                x, y, g = xgcd(a, b)
                ag, mbg = a // g, -b // g
                for jj in range(j, width):
                    aa, bb = row[jj], vec[jj]
                    row[jj] = x * aa + y * bb
                    vec[jj] = mbg * aa + ag * bb
        self.kernel.append(tuple(vec[self.dim:]))

    def _reduce(self, target: Sequence[int]) -> list[int] | None:
        vec = list(target) + [0] * self.rank_bound
        for j in filter(vec.__getitem__, range(self.dim)):
            p = self.pivot_cols[j]
            if p is None:
                return None
            row = self.basis[p]
            if vec[j] % row[j]:
                return None
            q = vec[j] // row[j]
            for jj in range(j, len(vec)):
                vec[jj] -= q * row[jj]
        return vec

    def __contains__(self, target: Sequence[int]) -> bool:
        return self._reduce(target) is not None

    def preimage(self, target: Sequence[int]) -> IntVec | None:
        """An integer z with A z = target, or None when target ∉ A·Zᵐ."""
        vec = self._reduce(target)
        if vec is None:
            return None
        return tuple(-x for x in vec[self.dim:])

    def index(self) -> int:
        """|det| of the echelon basis; 0 when the lattice is not full rank."""
        if len(self.basis) < self.dim:
            return 0
        result = 1
        for p, j in enumerate(self.pivot_rows):
            result *= self.basis[p][j]
        return abs(result)
