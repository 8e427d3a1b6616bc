"""
forge/serializers.py

JSON codecs for group elements and group descriptors, shared by the
management commands and the HTTP API.

Element JSON:
- lamplighter: {"n": -1, "f": "1@0,1@2"}
- Baumslag-Solitar: {"n": 1, "f": "3/2^2"}
- polycyclic: {"a": [2, 1], "b": [1]}
"""

from __future__ import annotations

from typing import Any

from rest_framework import serializers

from bs.elements import BSElement
from exactnum.exceptions import GrammarError, InvalidArgument
from exactnum.laurent import LaurentPoly
from exactnum.qfraction import QFraction
from lamplighter.elements import LLElement
from polycyclic.elements import PCElement
from polycyclic.spec import SpecError, spec_from_json

FAMILY_CHOICES = (
    ("ll", "Lamplighter Z_q wr Z"),
    ("bs", "Baumslag-Solitar BS(1,q)"),
    ("pc", "Polycyclic Z^n x| Z^k"),
)


class LamplighterElementSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    f = serializers.CharField(allow_blank=True, default="", trim_whitespace=True)

    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        try:
            attrs["f"] = LaurentPoly.parse(attrs["f"], self.context["q"])
        except GrammarError as exc:
            raise serializers.ValidationError({"f": str(exc)}) from exc
        return attrs

    def to_element(self) -> LLElement:
        data = self.validated_data
        return LLElement(self.context["q"], data["n"], data["f"])


class BSElementSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    f = serializers.CharField(default="0", trim_whitespace=True)

    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        try:
            attrs["f"] = QFraction.parse(attrs["f"], self.context["q"])
        except GrammarError as exc:
            raise serializers.ValidationError({"f": str(exc)}) from exc
        return attrs

    def to_element(self) -> BSElement:
        data = self.validated_data
        return BSElement(self.context["q"], data["n"], data["f"])


class PCElementSerializer(serializers.Serializer):
    a = serializers.ListField(child=serializers.IntegerField(), allow_empty=False)
    b = serializers.ListField(child=serializers.IntegerField(), allow_empty=False)

    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        spec = self.context["spec"]
        if len(attrs["a"]) != spec.n:
            raise serializers.ValidationError({"a": f"expected {spec.n} entries"})
        if len(attrs["b"]) != spec.k:
            raise serializers.ValidationError({"b": f"expected {spec.k} entries"})
        return attrs

    def to_element(self) -> PCElement:
        data = self.validated_data
        return PCElement.make(data["a"], data["b"])


ELEMENT_SERIALIZERS: dict[str, type[serializers.Serializer]] = {
    "ll": LamplighterElementSerializer,
    "bs": BSElementSerializer,
    "pc": PCElementSerializer,
}


def element_from_json(family: str, data: Any, context: dict[str, Any]):
    """
    Decode one element.

    Raises:
        GrammarError: the JSON does not describe an element of the group.
    """
    if not isinstance(data, dict):
        raise GrammarError(f"element must be a JSON object, got {data!r}")
    serializer = ELEMENT_SERIALIZERS[family](data=data, context=context)
    if not serializer.is_valid():
        raise GrammarError(
            f"invalid {family} element: {describe_errors(serializer.errors)}"
        )
    return serializer.to_element()


def describe_errors(errors: Any) -> str:
    """Flatten DRF error details into one line."""
    if isinstance(errors, dict):
        return "; ".join(
            f"{field}: {describe_errors(detail)}" for field, detail in errors.items()
        )
    if isinstance(errors, list):
        return ", ".join(describe_errors(detail) for detail in errors)
    return str(errors)


def element_to_json(family: str, g: Any) -> dict[str, Any]:
    return dict(ELEMENT_SERIALIZERS[family](g).data)


class GroupSerializer(serializers.Serializer):
    """{"group": "ll"|"bs", "q": 2} or {"group": "pc", "spec": {...}}."""

    group = serializers.ChoiceField(choices=FAMILY_CHOICES)
    q = serializers.IntegerField(min_value=2, required=False)
    spec = serializers.JSONField(required=False)

    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        if attrs["group"] in ("ll", "bs") and "q" not in attrs:
            raise serializers.ValidationError({"q": "required for this group"})
        if attrs["group"] == "pc":
            if "spec" not in attrs:
                raise serializers.ValidationError({"spec": "required for pc"})
            try:
                attrs["spec"] = spec_from_json(attrs["spec"])
            except SpecError as exc:
                raise serializers.ValidationError({"spec": exc.messages}) from exc
            except InvalidArgument as exc:
                raise serializers.ValidationError({"spec": str(exc)}) from exc
        return attrs
