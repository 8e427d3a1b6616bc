"""
polycyclic/services.py

Conjugacy in Zⁿ ⋊_φ Zᵏ.

For u = (a_u, v), w = (a_w, z) and γ = (x, y), u·γ = γ·w reads

    v = z      and      (Id − φ(v))x = a_u − φ(y)a_w.

Zero shift: u and w are conjugate iff a_u = φ(y)a_w for some y. Floating
eigen-coordinates propose y, integer matrices confirm it.

Nonzero shift: with L = (Id − φ(v))Zⁿ the question is whether some
a_u − φ(y)a_w lies in L. Rⁿ splits as E₁ ⊕ V where E₁ = ker(Id − φ(v));
the E₁ component fixes y up to the directions that fix it, and along
those directions y only matters through its orbit class modulo L.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache, partial
from typing import Literal

import numpy as np
from sympy import ImmutableMatrix, Poly, Rational

from exactnum.conf import forge_setting
from exactnum.exceptions import InternalInvariantError, InvalidArgument, UnsupportedSpec
from exactnum.lattice import IntLattice
from exactnum.linalg import (
    IntMat,
    IntVec,
    charpoly,
    determinant,
    identity,
    mat_mul,
    mat_sub,
    mat_vec,
    poly_at_matrix,
    poly_symbol,
    solve_linear_exact,
    squarefree_part,
    sup_norm,
    to_sympy,
    vec_add,
    vec_sub,
    zero_vector,
)
from exactnum.outcomes import ConjugacyOutcome

from .eigen import ZERO_TOLERANCE, joint_eigenbasis
from .elements import PCElement, check_element, pc_mul
from .metric import pc_length_est
from .spec import PCGroupSpec

logger = logging.getLogger(__name__)

Method = Literal["auto", "numeric", "scan"]

MAX_FINITE_ORDER = 1000
RELATION_TOLERANCE = 1e-8
MAX_RELATION_DENOMINATOR = 1000


def _lengths(
    u: PCElement, v: PCElement, spec: PCGroupSpec, witness: PCElement | None = None
) -> dict:
    lengths = {"u": pc_length_est(u, spec), "v": pc_length_est(v, spec)}
    if witness is not None:
        lengths["witness"] = pc_length_est(witness, spec)
    return lengths


# ---------------------------------------------------------------------------
# zero shift
# ---------------------------------------------------------------------------

def _candidate_box(center: IntVec, radius: int) -> Iterator[IntVec]:
    """Integer points within ``radius`` of ``center``, nearest first."""
    offsets = sorted(
        itertools.product(range(-radius, radius + 1), repeat=len(center)),
        key=lambda o: (sum(map(abs, o)), o),
    )
    for offset in offsets:
        yield vec_add(center, offset)


def _numeric_search(
    target: IntVec, source: IntVec, spec: PCGroupSpec, stats: dict
) -> IntVec | None:
    data = joint_eigenbasis(spec)
    support = data.support(source)
    if not np.array_equal(support, data.support(target)):
        stats["zero_pattern_match"] = False
        return None
    stats["zero_pattern_match"] = True

    coords_t = data.coordinates(target)[support]
    coords_s = data.coordinates(source)[support]
    logs = data.log_moduli[support]
    rhs = np.log(np.abs(coords_t)) - np.log(np.abs(coords_s))
    solution, *_ = np.linalg.lstsq(logs, rhs, rcond=None)
    center = tuple(int(round(float(c))) for c in np.real(solution))
    stats["numeric_center"] = list(center)

    radius = forge_setting("PC_CANDIDATE_RADIUS")
    tried = 0
    for y in _candidate_box(center, radius):
        tried += 1
        if mat_vec(spec.phi(y), source) == target:
            stats["candidates_tried"] = tried
            return y
    stats["candidates_tried"] = tried
    return None


def _finite_order(matrix: IntMat) -> int:
    one = identity(len(matrix))
    power, order = matrix, 1
    while power != one:
        if order >= MAX_FINITE_ORDER:
            raise InternalInvariantError(
                "generator with unit-modulus spectrum has no small finite order"
            )
        power = mat_mul(power, matrix)
        order += 1
    return order


def scan_window(target: IntVec, source: IntVec, spec: PCGroupSpec) -> int:
    """
    |y| bound for the exact k = 1 scan:
    ceil((log(1+‖u‖∞) + log(1+‖w‖∞) + log(1+cond V)) / min|log λ|) + slack.

    An integer matrix whose eigenvalues all have modulus 1 and which is
    semisimple has finite order, and one period is enough.
    """
    data = joint_eigenbasis(spec)
    step = data.min_log_modulus(0)
    if step == 0.0:
        return _finite_order(spec.generators[0]) - 1
    total = (
        math.log1p(sup_norm(target))
        + math.log1p(sup_norm(source))
        + math.log1p(data.condition)
    )
    return math.ceil(total / step) + forge_setting("PC_WINDOW_SLACK")


def _scan_search(
    target: IntVec, source: IntVec, spec: PCGroupSpec, stats: dict
) -> IntVec | None:
    window = scan_window(target, source, spec)
    stats["window"] = [-window, window]
    gen, inv = spec.generators[0], spec.inverses[0]
    forward = backward = source
    tried = 1
    if source == target:
        stats["scan_tried"] = tried
        return (0,)
    for step in range(1, window + 1):
        forward = mat_vec(gen, forward)
        backward = mat_vec(inv, backward)
        tried += 2
        if forward == target:
            stats["scan_tried"] = tried
            return (step,)
        if backward == target:
            stats["scan_tried"] = tried
            return (-step,)
    stats["scan_tried"] = tried
    return None


def solve_translation(
    target: Sequence[int],
    source: Sequence[int],
    spec: PCGroupSpec,
    method: Method = "auto",
) -> tuple[IntVec | None, dict]:
    """
    Find y with target = φ(y)·source.

    ``numeric`` rounds the log-linear least-squares solution and tests a
    box around it; ``scan`` walks φ^{±1} over the k = 1 window; ``auto``
    runs the numeric path and, for k = 1, falls back to the scan.

    Raises:
        UnsupportedSpec: a numeric solve is needed but some generator has
            an eigenvalue that is not positive real.
        InvalidArgument: ``scan`` was requested for k > 1.
    """
    target, source = tuple(target), tuple(source)
    stats: dict = {"method": method}
    if target == source:
        stats["method_used"] = "trivial"
        return zero_vector(spec.k), stats
    if method == "scan" and spec.k != 1:
        raise InvalidArgument("the exact orbit scan only exists for k = 1")
    if method != "scan" and not spec.positive_real_spectrum:
        raise UnsupportedSpec(
            "log-linear solve needs generators with positive real spectra"
        )

    y = None
    if method in ("auto", "numeric"):
        stats["method_used"] = "numeric"
        y = _numeric_search(target, source, spec, stats)
    if y is None and (method == "scan" or (method == "auto" and spec.k == 1)):
        stats["method_used"] = "scan"
        y = _scan_search(target, source, spec, stats)
    logger.debug("translation solve %s -> %s (%s)", source, y, stats)
    return y, stats


def pc_conj_translation(
    u: PCElement, w: PCElement, spec: PCGroupSpec, method: Method = "auto"
) -> ConjugacyOutcome:
    """Conjugacy of two pure translations; witness (0, y) with u = φ(y)w."""
    check_element(u, spec)
    check_element(w, spec)
    if any(u.b) or any(w.b):
        raise InvalidArgument("translation case needs both shift parts zero")
    y, stats = solve_translation(u.a, w.a, spec, method)
    stats = {"case": "zero-shift", **stats}
    if y is None:
        return ConjugacyOutcome.not_conjugate(
            "no y with u = φ(y)w", lengths=_lengths(u, w, spec), statistics=stats
        )
    witness = PCElement(zero_vector(spec.n), y)
    return ConjugacyOutcome.found(
        u,
        w,
        witness,
        partial(pc_mul, spec=spec),
        certificate={"translation_identity": True},
        lengths=_lengths(u, w, spec, witness),
        statistics=stats,
    )


# ---------------------------------------------------------------------------
# nonzero shift
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ShiftData:
    """Everything about Id − φ(v) that the nonzero-shift search reuses."""

    shift_matrix: IntMat
    lhs: IntMat                               # Id − φ(v)
    lattice: IntLattice
    determinant: int
    index: int                                # |det (Id − φ(v))|_V|
    projection: ImmutableMatrix | None        # onto E₁ along V; None if E₁ = 0
    e1_dimension: int


@lru_cache(maxsize=256)
def shift_data(spec: PCGroupSpec, shift: IntVec) -> ShiftData:
    matrix = spec.phi(shift)
    lhs = mat_sub(identity(spec.n), matrix)
    det = determinant(lhs)

    x = poly_symbol()
    root = Poly(x - 1, x)
    char = charpoly(matrix)
    cofactor = char
    while cofactor.degree() > 0 and cofactor.rem(root).is_zero:
        cofactor = cofactor.quo(root)
    index = abs(int(cofactor.eval(1)))
    if index == 0:
        raise InternalInvariantError("Id − φ(v) is singular on its complement")

    projection = None
    e1_dimension = 0
    if det == 0:
        # φ(v) is semisimple, so its minimal polynomial (x − 1)·h is
        # squarefree and t(φ(v))·h(φ(v)) projects onto E₁ when
        # s·(x − 1) + t·h = 1
        minimal = squarefree_part(char)
        h = minimal.quo(root)
        _, t, _ = root.gcdex(h)
        projection = poly_at_matrix(t * h, matrix)
        e1_dimension = spec.n - to_sympy(lhs).rank()

    return ShiftData(
        shift_matrix=matrix,
        lhs=lhs,
        lattice=IntLattice.column_span(lhs),
        determinant=det,
        index=index,
        projection=projection,
        e1_dimension=e1_dimension,
    )


def _solve_shift(data: ShiftData, rhs: IntVec) -> IntVec | None:
    """Integer x with (Id − φ(v))x = rhs, or None."""
    if data.determinant:
        solution = solve_linear_exact(data.lhs, rhs)
        return solution.as_ints() if solution.integral else None
    return data.lattice.preimage(rhs)


def _project(data: ShiftData, a: Sequence[int]) -> tuple[Rational, ...]:
    if data.projection is None:
        return (Rational(0),) * len(a)
    return tuple(data.projection * ImmutableMatrix(list(a)))


def _fixes(matrix: IntMat, vec: Sequence[Rational]) -> bool:
    return to_sympy(matrix) * ImmutableMatrix(list(vec)) == ImmutableMatrix(list(vec))


def _integral_pair(
    first: Sequence[Rational], second: Sequence[Rational]
) -> tuple[IntVec, IntVec]:
    scale = math.lcm(*(int(Rational(c).q) for c in (*first, *second)))
    return (
        tuple(int(c * scale) for c in first),
        tuple(int(c * scale) for c in second),
    )


def _orbit_order_along(a: Sequence[int], data: ShiftData, matrix: IntMat) -> int:
    start = current = tuple(a)
    for t in range(1, data.index + 1):
        current = mat_vec(matrix, current)
        if vec_sub(start, current) in data.lattice:
            return t
    raise InternalInvariantError(
        f"orbit order of {start} exceeds the lattice index {data.index}"
    )


def orbit_order(
    a: Sequence[int], shift: Sequence[int], direction: int, spec: PCGroupSpec
) -> int:
    """
    Least t > 0 with (Id − φ_i^t)a ∈ (Id − φ(v))Zⁿ.

    φ_i must fix the E₁ component of a, so the differences stay in V
    where the lattice has finite index d; the answer is at most d.

    Raises:
        InvalidArgument: bad direction, or φ_i moves the E₁ component.
        InternalInvariantError: no t ≤ d works.
    """
    if not 0 <= direction < spec.k:
        raise InvalidArgument(f"direction {direction} outside 0..{spec.k - 1}")
    data = shift_data(spec, tuple(int(c) for c in shift))
    gen = spec.generators[direction]
    if data.projection is not None and not _fixes(gen, _project(data, a)):
        raise InvalidArgument(
            f"generator {direction} does not fix the eigenvalue-1 component"
        )
    return _orbit_order_along(a, data, gen)


def _rational_relations(logs: np.ndarray) -> list[IntVec]:
    """
    Integer rows spanning the row space of ``logs``.

    The rows are log-moduli of algebraic units; their span is a rational
    subspace, so its reduced echelon form has small rational entries.
    """
    _, singular, vt = np.linalg.svd(logs)
    rank = int(np.sum(singular > RELATION_TOLERANCE * max(1.0, float(singular[0]))))
    echelon = vt[:rank].copy()
    relations = []
    row = 0
    for col in range(echelon.shape[1]):
        if row == rank:
            break
        pivot = row + int(np.argmax(np.abs(echelon[row:, col])))
        if abs(echelon[pivot, col]) < RELATION_TOLERANCE:
            continue
        echelon[[row, pivot]] = echelon[[pivot, row]]
        echelon[row] /= echelon[row, col]
        for other in range(rank):
            if other != row:
                echelon[other] -= echelon[other, col] * echelon[row]
        row += 1
    for values in echelon[:row]:
        entries = [
            Rational(float(c)).limit_denominator(MAX_RELATION_DENOMINATOR)
            for c in values
        ]
        scale = math.lcm(*(int(c.q) for c in entries))
        relations.append(tuple(int(c * scale) for c in entries))
    return relations


def stabiliser_basis(vec: Sequence[Rational], spec: PCGroupSpec) -> list[IntVec]:
    """
    Integer basis of {y ∈ Zᵏ : φ(y)·vec = vec}.

    φ(y) fixes vec exactly when Σ yᵢ log|λᵢⱼ| = 0 on every eigen-coordinate
    j where vec lives. Those relations are read off numerically, the
    integer points of their kernel come from an exact lattice, and every
    basis vector is checked with integer matrices.

    Raises:
        UnsupportedSpec: some generator moves vec and the spectrum is not
            positive real, or a rounded relation does not hold exactly.
    """
    units = [tuple(int(i == j) for j in range(spec.k)) for i in range(spec.k)]
    if all(_fixes(g, vec) for g in spec.generators):
        return units
    if not spec.positive_real_spectrum:
        raise UnsupportedSpec(
            "stabiliser search needs generators with positive real spectra"
        )
    eigen = joint_eigenbasis(spec)
    _, source = _integral_pair(vec, vec)
    relations = _rational_relations(eigen.log_moduli[eigen.support(source)])
    basis = IntLattice.column_span(relations).kernel if relations else units
    for s in basis:
        if not _fixes(spec.phi(s), vec):
            raise UnsupportedSpec(
                f"stabiliser direction {list(s)} does not fix the "
                "eigenvalue-1 component"
            )
    return list(basis)


def _nonzero_single_generator(
    u: PCElement, w: PCElement, spec: PCGroupSpec, data: ShiftData, stats: dict
) -> tuple[PCElement | None, dict]:
    # powers of w centralise w, so y can be taken modulo |v|
    span = abs(u.b[0])
    stats["box_size"] = span
    for y in range(span):
        rhs = vec_sub(u.a, mat_vec(spec.phi((y,)), w.a))
        x = _solve_shift(data, rhs)
        if x is not None:
            stats["candidates_tried"] = y + 1
            return PCElement(x, (y,)), {"y_window": 0 <= y < span}
    stats["candidates_tried"] = span
    return None, {}


def _nonzero_split(
    u: PCElement,
    w: PCElement,
    spec: PCGroupSpec,
    data: ShiftData,
    stats: dict,
    method: Method,
) -> tuple[PCElement | None, dict]:
    p_u, p_w = _project(data, u.a), _project(data, w.a)
    start = zero_vector(spec.k)
    directions = [tuple(int(i == j) for j in range(spec.k)) for i in range(spec.k)]

    if any(p_u) or any(p_w):
        if all(_fixes(g, p_w) for g in spec.generators):
            if p_u != p_w:
                stats["reason_detail"] = "E1 components differ and are fixed"
                return None, {}
        else:
            target, source = _integral_pair(p_u, p_w)
            y0, solve_stats = solve_translation(target, source, spec, method)
            stats["e1_solve"] = solve_stats
            if y0 is None:
                stats["reason_detail"] = "E1 components not related by φ"
                return None, {}
            start = y0
            directions = stabiliser_basis(p_w, spec)
    stats["y0"] = list(start)
    stats["stabiliser_basis"] = [list(s) for s in directions]

    orders = [_orbit_order_along(w.a, data, spec.phi(s)) for s in directions]
    stats["orbit_orders"] = orders
    stats["box_size"] = math.prod(orders)

    tried = 0
    for coefficients in itertools.product(*(range(t) for t in orders)):
        tried += 1
        y = start
        for c, s in zip(coefficients, directions):
            y = vec_add(y, tuple(c * si for si in s))
        rhs = vec_sub(u.a, mat_vec(spec.phi(y), w.a))
        x = _solve_shift(data, rhs)
        if x is None:
            continue
        stats["candidates_tried"] = tried
        certificate = {
            "e1_condition": (
                data.projection is None
                or _project(data, u.a)
                == tuple(to_sympy(spec.phi(y)) * ImmutableMatrix(list(p_w)))
            ),
            "y_window": all(0 <= c < t for c, t in zip(coefficients, orders)),
        }
        return PCElement(x, y), certificate
    stats["candidates_tried"] = tried
    return None, {}


def pc_conj_nonzero(
    u: PCElement, w: PCElement, spec: PCGroupSpec, method: Method = "auto"
) -> ConjugacyOutcome:
    """
    Conjugacy when both shift parts equal some v ≠ 0.

    k = 1 tries y = 0, ..., |v| − 1 and solves (Id − φᵛ)x = a_u − φʸa_w
    over the integers. For k > 1 the E₁ component decides y up to its integer
    stabiliser, and the box Π [0, T_j) of orbit orders along a basis of
    that stabiliser covers the rest; the first witness in lexicographic
    order wins.
    """
    check_element(u, spec)
    check_element(w, spec)
    if u.b != w.b:
        return ConjugacyOutcome.not_conjugate(
            "shift parts differ", lengths=_lengths(u, w, spec)
        )
    if not any(u.b):
        raise InvalidArgument("nonzero-shift case needs a nonzero shift part")

    data = shift_data(spec, u.b)
    stats: dict = {
        "case": "nonzero-shift",
        "shift": list(u.b),
        "determinant": data.determinant,
        "index": data.index,
        "e1_dimension": data.e1_dimension,
    }
    if spec.k == 1:
        witness, checks = _nonzero_single_generator(u, w, spec, data, stats)
    else:
        witness, checks = _nonzero_split(u, w, spec, data, stats, method)
    logger.debug("polycyclic nonzero shift %s: %s", u.b, stats)

    if witness is None:
        return ConjugacyOutcome.not_conjugate(
            "no y in the search box makes a_u − φ(y)a_w a lattice vector",
            lengths=_lengths(u, w, spec),
            statistics=stats,
        )
    checks["lattice_membership"] = mat_vec(data.lhs, witness.a) == vec_sub(
        u.a, mat_vec(spec.phi(witness.b), w.a)
    )
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise InternalInvariantError(f"witness {witness} fails {failed}")
    return ConjugacyOutcome.found(
        u,
        w,
        witness,
        partial(pc_mul, spec=spec),
        certificate=checks,
        lengths=_lengths(u, w, spec, witness),
        statistics=stats,
    )


def pc_conjugacy(
    u: PCElement, v: PCElement, spec: PCGroupSpec, method: Method = "auto"
) -> ConjugacyOutcome:
    """Route on the shift parts: unequal, both zero, or equal and nonzero."""
    check_element(u, spec)
    check_element(v, spec)
    if u.b != v.b:
        return ConjugacyOutcome.not_conjugate(
            "shift parts differ", lengths=_lengths(u, v, spec)
        )
    if not any(u.b):
        return pc_conj_translation(u, v, spec, method)
    return pc_conj_nonzero(u, v, spec, method)
