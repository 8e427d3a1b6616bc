"""
exactnum/linalg.py

Dense integer vectors and matrices as nested tuples of Python ints, with
exact rational linear algebra delegated to sympy.

The hot paths (products, powers, matrix-vector application) stay in plain
integer arithmetic. Determinants and solves go through sympy's
fraction-free Bareiss elimination, so nothing in a decision path is ever
rounded.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import sympy
from sympy import ImmutableMatrix, Poly, Rational

from .exceptions import InvalidArgument, SingularMatrix

IntVec = tuple[int, ...]
IntMat = tuple[IntVec, ...]

_X = sympy.Symbol("x")


def int_vector(values: Iterable[int]) -> IntVec:
    return tuple(int(v) for v in values)


def int_matrix(rows: Iterable[Iterable[int]]) -> IntMat:
    """Validate and freeze a rectangular integer matrix."""
    frozen = tuple(int_vector(row) for row in rows)
    if not frozen or any(len(row) != len(frozen[0]) for row in frozen):
        raise InvalidArgument("matrix rows must be non-empty and equal length")
    return frozen


def identity(n: int) -> IntMat:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zero_vector(n: int) -> IntVec:
    return (0,) * n


def mat_mul(a: IntMat, b: IntMat) -> IntMat:
    cols = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols)
        for row in a
    )


def mat_vec(a: IntMat, v: Sequence[int]) -> IntVec:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_sub(a: IntMat, b: IntMat) -> IntMat:
    return tuple(
        tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def mat_pow(a: IntMat, e: int, a_inv: IntMat | None = None) -> IntMat:
    """aᵉ by repeated squaring; negative e needs ``a_inv``."""
    if e < 0:
        if a_inv is None:
            raise InvalidArgument("negative power needs the inverse matrix")
        a, e = a_inv, -e
    result = identity(len(a))
    base = a
    while e:
        if e & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        e >>= 1
    return result


def vec_add(u: Sequence[int], v: Sequence[int]) -> IntVec:
    return tuple(x + y for x, y in zip(u, v))


def vec_sub(u: Sequence[int], v: Sequence[int]) -> IntVec:
    return tuple(x - y for x, y in zip(u, v))


def vec_neg(u: Sequence[int]) -> IntVec:
    return tuple(-x for x in u)


def sup_norm(v: Sequence[int]) -> int:
    return max((abs(x) for x in v), default=0)


def l1_norm(v: Sequence[int]) -> int:
    return sum(abs(x) for x in v)


def to_sympy(a: IntMat) -> ImmutableMatrix:
    return ImmutableMatrix(a)


def from_sympy(m: sympy.MatrixBase) -> IntMat:
    rows = m.tolist()
    if any(not sympy.sympify(x).is_integer for row in rows for x in row):
        raise InvalidArgument("matrix has non-integer entries")
    return tuple(tuple(int(x) for x in row) for row in rows)


def determinant(a: IntMat) -> int:
    return int(to_sympy(a).det(method="bareiss"))


def unimodular_inverse(a: IntMat) -> IntMat:
    """Integer inverse of a matrix with determinant ±1."""
    det = determinant(a)
    if det not in (1, -1):
        raise InvalidArgument(f"matrix is not unimodular (det {det})")
    return from_sympy(to_sympy(a).adjugate(method="bareiss") * det)


@dataclass(frozen=True)
class LinearSolution:
    values: tuple[Rational, ...]
    integral: bool

    def as_ints(self) -> IntVec:
        if not self.integral:
            raise InvalidArgument("solution is not integral")
        return tuple(int(v) for v in self.values)


def solve_linear_exact(m: IntMat, b: Sequence[int]) -> LinearSolution:
    """
    Solve ``m x = b`` over the rationals.

    Uses x = adj(m)·b / det(m) with a fraction-free adjugate, so the only
    division is the final one.

    Raises:
        InvalidArgument: m is not square or b has the wrong length.
        SingularMatrix: det(m) = 0.
    """
    n = len(m)
    if any(len(row) != n for row in m) or len(b) != n:
        raise InvalidArgument("solve needs a square matrix and matching b")
    matrix = to_sympy(m)
    det = int(matrix.det(method="bareiss"))
    if det == 0:
        raise SingularMatrix("matrix is singular")
    numerators = matrix.adjugate(method="bareiss") * ImmutableMatrix(list(b))
    values = tuple(Rational(int(v), det) for v in numerators)
    return LinearSolution(values, all(v.q == 1 for v in values))


def charpoly(a: IntMat) -> Poly:
    return Poly(to_sympy(a).charpoly(_X).as_expr(), _X)


def squarefree_part(p: Poly) -> Poly:
    """p / gcd(p, p′), made monic."""
    return p.quo(sympy.gcd(p, p.diff(_X))).monic()


def poly_at_matrix(p: Poly, a: IntMat) -> ImmutableMatrix:
    """Evaluate p(a) exactly by Horner's rule."""
    matrix = to_sympy(a)
    eye = sympy.eye(len(a))
    result = sympy.zeros(len(a), len(a))
    for coeff in p.all_coeffs():
        result = result * matrix + coeff * eye
    return ImmutableMatrix(result)


def poly_symbol() -> sympy.Symbol:
    return _X
