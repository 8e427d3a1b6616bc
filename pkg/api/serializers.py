from typing import Any

from rest_framework import serializers

from forge.models import AuditRun
from forge.serializers import GroupSerializer
from forge.services import GroupContext

EVAL_OPERATIONS = ("mul", "inv", "len", "bounds", "dl-dist", "oracle-len")
BINARY_OPERATIONS = {"mul", "dl-dist"}


class GroupRequestSerializer(GroupSerializer):
    """
    Base for request bodies that name a group.

    Elements may be given in the text grammar ("1;1@0") or as JSON
    objects ({"n": 1, "f": "1@0"}).
    """

    def context_for(self) -> GroupContext:
        data = self.validated_data
        return GroupContext.build(data["group"], data.get("q"), data.get("spec"))

    @staticmethod
    def element(ctx: GroupContext, value: Any) -> Any:
        if isinstance(value, str):
            return ctx.parse(value)
        return ctx.from_json(value)


class EvalRequestSerializer(GroupRequestSerializer):
    operation = serializers.ChoiceField(choices=EVAL_OPERATIONS)
    element = serializers.JSONField(required=False)
    lhs = serializers.JSONField(required=False)
    rhs = serializers.JSONField(required=False)
    metric = serializers.ChoiceField(
        choices=("rescaled", "raw"), default="rescaled"
    )
    radius = serializers.IntegerField(min_value=0, required=False)

    def validate(self, attrs: dict[str, Any]) -> dict[str, Any]:
        attrs = super().validate(attrs)
        if attrs["operation"] in BINARY_OPERATIONS:
            missing = [k for k in ("lhs", "rhs") if k not in attrs]
        else:
            missing = [] if "element" in attrs else ["element"]
        if missing:
            raise serializers.ValidationError(
                {k: f"required for {attrs['operation']}" for k in missing}
            )
        return attrs


class ConjugacyRequestSerializer(GroupRequestSerializer):
    u = serializers.JSONField()
    v = serializers.JSONField()
    oracle = serializers.BooleanField(default=False)


class AuditRequestSerializer(GroupRequestSerializer):
    samples = serializers.IntegerField(min_value=0, max_value=1000, default=50)
    seed = serializers.IntegerField(default=0)
    max_len = serializers.IntegerField(min_value=0, max_value=40, default=12)


class AuditRunListSerializer(serializers.ModelSerializer):
    passed = serializers.BooleanField(read_only=True)

    class Meta:
        model = AuditRun
        fields = [
            "id",
            "family",
            "q",
            "spec",
            "seed",
            "samples",
            "max_len",
            "violations",
            "max_ratio",
            "mean_ratio",
            "passed",
            "created_at",
        ]
        read_only_fields = fields


class AuditRunDetailSerializer(AuditRunListSerializer):
    class Meta(AuditRunListSerializer.Meta):
        fields = AuditRunListSerializer.Meta.fields + ["report"]
        read_only_fields = fields
