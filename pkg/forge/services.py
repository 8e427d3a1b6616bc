"""
forge/services.py

One facade over the three group families, used by the management
commands, the audit runner and the API views so that parsing, arithmetic,
metrics and conjugacy are dispatched the same way everywhere.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from typing import Any

from bs import services as bs_services
from bs.elements import BSElement, bs_inv, bs_mul
from bs.hyperbolic import log_valuation_chain
from bs.metric import Metric, bs_length_bounds
from exactnum.exceptions import GrammarError, InvalidArgument
from exactnum.outcomes import ConjugacyOutcome
from lamplighter import services as ll_services
from lamplighter.diestel_leader import dl_distance, dl_point
from lamplighter.elements import LLElement, ll_inv, ll_mul
from lamplighter.metric import ll_length_bounds, ll_word_length
from oracle.box import box_conjugator_search
from oracle.cayley import BruteResult, bfs_word_length, brute_conjugator, default_radius
from oracle.generating_sets import (
    Family,
    GeneratingSet,
    bs_generating_set,
    lamplighter_generating_set,
    pc_generating_set,
)
from polycyclic.elements import PCElement, pc_identity, pc_inv, pc_mul
from polycyclic.metric import pc_length_est
from polycyclic.services import pc_conjugacy
from polycyclic.spec import PCGroupSpec

from .serializers import element_from_json, element_to_json


class MixedGroups(InvalidArgument):
    """Two inputs name different groups."""


THEOREMS = {
    Family.LAMPLIGHTER: {
        "statement": "|γ| ≤ 3(|u|+|v|)",
        "constant": ll_services.CONJUGATOR_CONSTANT,
        "asserted": True,
        "metric": "exact word length",
    },
    Family.BAUMSLAG_SOLITAR: {
        "statement": "|γ| ≤ 2/log√2 (|u|+|v|)",
        "constant": bs_services.CONJUGATOR_CONSTANT,
        "asserted": False,
        "metric": "upper estimate for γ, lower estimates for u and v",
    },
}


def pc_theorem(spec: PCGroupSpec) -> dict[str, Any]:
    if spec.k == 1:
        statement = "|γ| exponential in |u|+|v| (k = 1)"
    else:
        statement = "|γ| exponential in |u|+|v| (k > 1, spec-dependent constants)"
    return {
        "statement": statement,
        "constant": None,
        "asserted": False,
        "metric": "‖b‖₁ + log₂(1 + ‖a‖∞) estimates",
    }


@dataclass(frozen=True)
class GroupContext:
    """A group: a family plus q (ll, bs) or a validated spec (pc)."""

    family: Family
    q: int | None = None
    spec: PCGroupSpec | None = None

    @classmethod
    def build(
        cls, family: str, q: int | None = None, spec: PCGroupSpec | None = None
    ) -> GroupContext:
        try:
            fam = Family(family)
        except ValueError as exc:
            raise InvalidArgument(f"unknown group family {family!r}") from exc
        if fam is Family.POLYCYCLIC:
            if spec is None:
                raise InvalidArgument("polycyclic groups need a spec")
            return cls(fam, None, spec)
        if q is None or q < 2:
            raise InvalidArgument(f"q must be an integer >= 2, got {q}")
        return cls(fam, int(q), None)

    # -- description --------------------------------------------------------

    def descriptor(self) -> dict[str, Any]:
        if self.family is Family.POLYCYCLIC:
            return {"group": self.family.value, "spec": self.spec.to_json()}
        return {"group": self.family.value, "q": self.q}

    def theorem(self) -> dict[str, Any]:
        if self.family is Family.POLYCYCLIC:
            return pc_theorem(self.spec)
        return dict(THEOREMS[self.family])

    # -- codecs -------------------------------------------------------------

    def _codec_context(self) -> dict[str, Any]:
        return {"q": self.q, "spec": self.spec}

    def parse(self, text: str) -> Any:
        """Element from its text grammar, or from a JSON object string."""
        stripped = (text or "").strip()
        if stripped.startswith("{"):
            try:
                data = json.loads(stripped)
            except json.JSONDecodeError as exc:
                raise GrammarError(f"element JSON is malformed: {exc}") from exc
            return self.from_json(data)
        if self.family is Family.LAMPLIGHTER:
            return LLElement.parse(stripped, self.q)
        if self.family is Family.BAUMSLAG_SOLITAR:
            return BSElement.parse(stripped, self.q)
        g = PCElement.parse(stripped)
        return self.from_json(g.to_json())

    def from_json(self, data: Any) -> Any:
        if isinstance(data, dict):
            family = data.get("group", self.family.value)
            q = data.get("q", self.q)
            if family != self.family.value or q != self.q:
                raise MixedGroups(
                    f"element of {family} (q={q}) given where "
                    f"{self.family.value} (q={self.q}) was expected"
                )
        return element_from_json(self.family.value, data, self._codec_context())

    def to_json(self, g: Any) -> dict[str, Any]:
        return element_to_json(self.family.value, g)

    # -- arithmetic ---------------------------------------------------------

    def identity(self) -> Any:
        if self.family is Family.LAMPLIGHTER:
            return LLElement.identity(self.q)
        if self.family is Family.BAUMSLAG_SOLITAR:
            return BSElement.identity(self.q)
        return pc_identity(self.spec)

    def multiply(self, g: Any, h: Any) -> Any:
        if self.family is Family.LAMPLIGHTER:
            return ll_mul(g, h)
        if self.family is Family.BAUMSLAG_SOLITAR:
            return bs_mul(g, h)
        return pc_mul(g, h, self.spec)

    def inverse(self, g: Any) -> Any:
        if self.family is Family.LAMPLIGHTER:
            return ll_inv(g)
        if self.family is Family.BAUMSLAG_SOLITAR:
            return bs_inv(g)
        return pc_inv(g, self.spec)

    def conjugate_by(self, u: Any, gamma: Any) -> Any:
        """γ⁻¹uγ, the v for which γ conjugates u to v."""
        return self.multiply(self.inverse(gamma), self.multiply(u, gamma))

    # -- metrics ------------------------------------------------------------

    def length(self, g: Any) -> dict[str, Any]:
        if self.family is Family.LAMPLIGHTER:
            return {"length": ll_word_length(g)}
        if self.family is Family.BAUMSLAG_SOLITAR:
            return {"estimate": asdict(bs_length_bounds(g))}
        return {"estimate": pc_length_est(g, self.spec)}

    def bounds(self, g: Any, metric: Metric = "rescaled") -> dict[str, Any]:
        if self.family is Family.LAMPLIGHTER:
            bounds = ll_length_bounds(g)
            return {**asdict(bounds), "lower": bounds.lower}
        if self.family is Family.BAUMSLAG_SOLITAR:
            lower, distance, upper = log_valuation_chain(g.f)
            return {
                **asdict(bs_length_bounds(g, metric)),
                "translation_chain": {
                    "lower": lower,
                    "distance": distance,
                    "upper": upper,
                },
            }
        return {"estimate": pc_length_est(g, self.spec)}

    def dl_distance(self, g: Any, h: Any) -> int:
        if self.family is not Family.LAMPLIGHTER:
            raise InvalidArgument("dl-dist is only defined for lamplighter groups")
        return dl_distance(dl_point(g), dl_point(h))

    # -- conjugacy ----------------------------------------------------------

    def conjugacy(self, u: Any, v: Any) -> ConjugacyOutcome:
        if self.family is Family.LAMPLIGHTER:
            return ll_services.ll_conjugacy(u, v)
        if self.family is Family.BAUMSLAG_SOLITAR:
            return bs_services.bs_conjugacy(u, v)
        return pc_conjugacy(u, v, self.spec)

    def bound(self, outcome: ConjugacyOutcome) -> float | None:
        """K(|u| + |v|) for the families with a linear bound."""
        constant = self.theorem()["constant"]
        if constant is None:
            return None
        return constant * (outcome.lengths["u"] + outcome.lengths["v"])

    # -- oracles ------------------------------------------------------------

    def generating_set(self) -> GeneratingSet:
        if self.family is Family.LAMPLIGHTER:
            return lamplighter_generating_set(self.q)
        if self.family is Family.BAUMSLAG_SOLITAR:
            return bs_generating_set(self.q)
        return pc_generating_set(self.spec)

    def oracle_length(self, g: Any, radius: int | None = None) -> dict[str, Any]:
        gens = self.generating_set()
        radius = default_radius(gens) if radius is None else radius
        return {"length": bfs_word_length(gens, g, radius), "radius": radius}

    def oracle_conjugator(self, u: Any, v: Any) -> BruteResult:
        """
        Brute-force conjugator search. Lamplighter radii are 3(|u|+|v|) and
        therefore complete; the other families only semi-decide.
        """
        if self.family is Family.POLYCYCLIC:
            return box_conjugator_search(u, v, self.spec)
        gens = self.generating_set()
        if self.family is Family.LAMPLIGHTER:
            radius = ll_services.conjugator_bound(u, v)
            return brute_conjugator(gens, u, v, radius, complete=True)
        return brute_conjugator(gens, u, v, default_radius(gens))


def conjugacy_report(ctx: GroupContext, u: Any, v: Any) -> dict[str, Any]:
    """The JSON body shared by ``manage.py conj`` and ``POST /api/conjugacy/``."""
    outcome = ctx.conjugacy(u, v)
    bound = ctx.bound(outcome)
    witness_length = outcome.lengths.get("witness")
    within = None
    if outcome.conjugate and bound is not None:
        within = witness_length <= bound + 1e-9
    return {
        "conjugate": outcome.conjugate,
        "witness": ctx.to_json(outcome.witness) if outcome.conjugate else None,
        "witness_length": witness_length,
        "bound": bound,
        "within_bound": within,
        "lengths": dict(outcome.lengths),
        "certificate": dict(outcome.certificate),
        "statistics": jsonable(outcome.statistics),
    }


def oracle_check(ctx: GroupContext, u: Any, v: Any, conjugate: bool) -> dict[str, Any]:
    """
    Cross-check a verdict. Disagreement means the oracle found a conjugator
    the procedure missed, or a complete search found none for a pair the
    procedure called conjugate.
    """
    result = ctx.oracle_conjugator(u, v)
    agrees = result.found == conjugate if result.complete else (
        not result.found or conjugate
    )
    return {
        "found": result.found,
        "witness": ctx.to_json(result.witness) if result.found else None,
        "radius": result.radius,
        "complete": result.complete,
        "searched": result.searched,
        "agrees": agrees,
    }


def jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return str(value)
