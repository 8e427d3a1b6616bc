"""
forge/testing.py

Hypothesis strategies for group elements and the profiles the test suites
load. ``HYPOTHESIS_PROFILE=ci`` runs more examples than the default
``dev`` profile; ``HYPOTHESIS_PROFILE=acceptance`` runs 10 000 per property.
"""

from __future__ import annotations

import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from bs.elements import BSElement
from exactnum.laurent import LaurentPoly
from lamplighter.elements import LLElement
from polycyclic.elements import PCElement
from polycyclic.spec import PCGroupSpec

settings.register_profile(
    "dev",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile(
    "ci",
    max_examples=300,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile(
    "acceptance",
    max_examples=10_000,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))


def laurent_polys(q: int, span: int = 6, max_terms: int = 4) -> st.SearchStrategy:
    return st.dictionaries(
        st.integers(-span, span),
        st.integers(1, q - 1),
        max_size=max_terms,
    ).map(lambda terms: LaurentPoly(q, terms))


def ll_elements(q: int, span: int = 6, max_terms: int = 4) -> st.SearchStrategy:
    return st.builds(
        LLElement,
        st.just(q),
        st.integers(-span, span),
        laurent_polys(q, span, max_terms),
    )


def bs_elements(q: int, shift: int = 4, numerator: int = 64) -> st.SearchStrategy:
    return st.builds(
        BSElement.make,
        st.just(q),
        st.integers(-shift, shift),
        st.integers(-numerator, numerator),
        st.integers(0, 3),
    )


def pc_elements(
    spec: PCGroupSpec, a_range: int = 20, b_range: int = 2
) -> st.SearchStrategy:
    return st.builds(
        PCElement.make,
        st.lists(st.integers(-a_range, a_range), min_size=spec.n, max_size=spec.n),
        st.lists(st.integers(-b_range, b_range), min_size=spec.k, max_size=spec.k),
    )
