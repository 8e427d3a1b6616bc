"""
lamplighter/metric.py

Exact word length in Z_q wr Z for the generating set {(1, b)^±1}, whose
Cayley graph is DL_2(q), plus the closed-form bounds in terms of the
shift n and the valuations of f.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diestel_leader import basepoint, dl_distance, dl_point
from .elements import LLElement


def ll_word_length(g: LLElement) -> int:
    return dl_distance(basepoint(g.q), dl_point(g))


def _unipotent_length(v0: int | float, v0_minus: int | float) -> int:
    """Length of (0, f): 2·max{v0⁻+1, 0} - 2·min{v0, 0}."""
    return int(2 * max(v0_minus + 1, 0) - 2 * min(v0, 0))


@dataclass(frozen=True)
class LLLengthBounds:
    """
    Bounds on |(n, f)|.

    ``lower_shift`` is |n|, ``lower_support`` is
    max{v0⁻, 0} + max{-v0, 0}; ``exact`` is filled when n = 0 or f = 0.
    ``upper`` is |n| + |(0, f)| from writing (n, f) = (0, f)(n, 0).
    ``span_upper`` is |n| + 2(v0⁻ - v0), which is not a valid bound when
    f has a single term or the shift points away from the support; it is
    kept for comparison and never asserted.
    """

    lower_shift: int
    lower_support: int
    exact: int | None
    upper: int
    span_upper: int

    @property
    def lower(self) -> int:
        return max(self.lower_shift, self.lower_support)


def ll_length_bounds(g: LLElement) -> LLLengthBounds:
    n, f = g.n, g.f
    if not f:
        return LLLengthBounds(abs(n), 0, abs(n), abs(n), abs(n))
    v0, v0_minus = f.v0, f.v0_minus
    unipotent = _unipotent_length(v0, v0_minus)
    return LLLengthBounds(
        lower_shift=abs(n),
        lower_support=int(max(v0_minus, 0) + max(-v0, 0)),
        exact=unipotent if n == 0 else None,
        upper=abs(n) + unipotent,
        span_upper=int(abs(n) + 2 * (v0_minus - v0)),
    )
