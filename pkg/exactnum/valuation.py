"""
exactnum/valuation.py

One entry point for valuations of both kinds of translation part.
"""

from __future__ import annotations

from functools import singledispatch

from .laurent import LaurentPoly
from .qfraction import QFraction


@singledispatch
def valuation(f: object):
    """
    Valuation of a lamp configuration or of an element of Z[1/q].

    For a LaurentPoly returns the pair (v0, v0_minus) of lowest and highest
    exponents, ``(inf, -inf)`` for zero. For a QFraction returns its
    q-adic valuation, ``inf`` for zero.
    """
    raise TypeError(f"no valuation defined for {type(f).__name__}")


@valuation.register
def _(f: LaurentPoly) -> tuple[int | float, int | float]:
    return f.v0, f.v0_minus


@valuation.register
def _(f: QFraction) -> int | float:
    return f.v0
