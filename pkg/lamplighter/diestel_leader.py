"""
lamplighter/diestel_leader.py

The Diestel-Leader graph DL_2(q) as the horocyclic product of two
(q+1)-regular trees, and the action of Z_q wr Z on it.

Tree vertices are closed balls of Laurent series. A vertex is stored as a
level plus the finitely many coefficients that pin the ball down:

- first tree, level ℓ: the ball B(g, q⁻ˡ), stored as g restricted to
  exponents < ℓ;
- second tree, level m: the ball of series agreeing with h on exponents
  ≥ -m, stored as h restricted to those exponents.

The basepoint is (level 0, 0) in both trees and (n, f) sends it to
(level n, f|exp<n) and (level -n, f|exp≥n), so each coefficient of f
lives in exactly one tree and the levels always sum to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from exactnum.exceptions import InvalidArgument
from exactnum.laurent import LaurentPoly

from .elements import LLElement


class Side(str, Enum):
    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True, slots=True)
class DLVertex:
    q: int
    level: int
    trunc: LaurentPoly
    side: Side

    def __post_init__(self) -> None:
        if self.trunc.modulus != self.q:
            raise InvalidArgument("vertex coefficients must lie in Z_q")
        if not self.trunc:
            return
        if self.side is Side.FIRST and self.trunc.v0_minus >= self.level:
            raise InvalidArgument(
                f"first-tree vertex at level {self.level} may only carry "
                "exponents below its level"
            )
        if self.side is Side.SECOND and self.trunc.v0 < -self.level:
            raise InvalidArgument(
                f"second-tree vertex at level {self.level} may only carry "
                f"exponents >= {-self.level}"
            )


@dataclass(frozen=True, slots=True)
class DLPoint:
    first: DLVertex
    second: DLVertex

    def __post_init__(self) -> None:
        if self.first.level + self.second.level != 0:
            raise InvalidArgument("horocycle levels of a DL point must sum to 0")
        if self.first.side is not Side.FIRST or self.second.side is not Side.SECOND:
            raise InvalidArgument("DL point needs one vertex from each tree")
        if self.first.q != self.second.q:
            raise InvalidArgument("both tree vertices must share q")

    @property
    def q(self) -> int:
        return self.first.q


def basepoint(q: int) -> DLPoint:
    zero = LaurentPoly.zero(q)
    return DLPoint(DLVertex(q, 0, zero, Side.FIRST), DLVertex(q, 0, zero, Side.SECOND))


def dl_point(g: LLElement) -> DLPoint:
    """The image g·basepoint."""
    return DLPoint(
        DLVertex(g.q, g.n, g.f.truncate(upper=g.n), Side.FIRST),
        DLVertex(g.q, -g.n, g.f.truncate(lower=g.n), Side.SECOND),
    )


def dl_action(g: LLElement, p: DLPoint) -> DLPoint:
    """
    Apply (s, P) to a DL point: a ball around h moves to the ball around
    P + tˢh, one level down in the first tree and one up in the second.
    """
    if g.q != p.q:
        raise InvalidArgument("element and point belong to different q")
    s = g.n
    level = p.first.level + s
    first = (g.f + p.first.trunc.shift(s)).truncate(upper=level)
    second = (g.f + p.second.trunc.shift(s)).truncate(lower=s - p.second.level)
    return DLPoint(
        DLVertex(g.q, level, first, Side.FIRST),
        DLVertex(g.q, -level, second, Side.SECOND),
    )


def _tree_distance(level1: int, level2: int, meet: int | float) -> int:
    common = min(level1, level2, meet)
    return int(level1 + level2 - 2 * common)


def dl_distance(p1: DLPoint, p2: DLPoint) -> int:
    """
    Graph distance in DL_2(q).

    In each tree the distance runs through the deepest common ancestor:
    in the first tree the two balls split at v0 of the difference, in the
    second tree at -v0_minus - 1. A path in DL_2(q) walks both trees at
    once, so the level change is counted once instead of twice.
    """
    if p1.q != p2.q:
        raise InvalidArgument("points belong to different q")
    first_meet = (p1.first.trunc - p2.first.trunc).v0
    second_meet = -(p1.second.trunc - p2.second.trunc).v0_minus - 1
    d_first = _tree_distance(p1.first.level, p2.first.level, first_meet)
    d_second = _tree_distance(p1.second.level, p2.second.level, second_meet)
    return d_first + d_second - abs(p1.first.level - p2.first.level)
