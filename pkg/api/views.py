import logging
from typing import Any

from rest_framework import generics, permissions, status
from rest_framework.response import Response
from rest_framework.views import APIView

from exactnum.exceptions import ConjForgeError, InternalInvariantError
from forge.audit import run_audit
from forge.models import AuditRun
from forge.services import conjugacy_report, oracle_check

from .serializers import (
    AuditRequestSerializer,
    AuditRunDetailSerializer,
    AuditRunListSerializer,
    ConjugacyRequestSerializer,
    EvalRequestSerializer,
)

logger = logging.getLogger(__name__)


def _error(exc: Exception) -> Response:
    """Library errors become 400s; a failed invariant is a server bug."""
    if isinstance(exc, InternalInvariantError):
        logger.error("internal invariant failed: %s", exc)
        return Response(
            {"detail": f"internal invariant failed: {exc}"},
            status=status.HTTP_500_INTERNAL_SERVER_ERROR,
        )
    return Response(
        {"detail": str(exc), "error": type(exc).__name__},
        status=status.HTTP_400_BAD_REQUEST,
    )


class EvalAPIView(APIView):
    """
    POST: one group operation.

    Body: {"group": "ll", "q": 2, "operation": "len", "element": "0;1@0,1@2"}
    Binary operations (mul, dl-dist) take "lhs" and "rhs" instead.
    """

    permission_classes = [permissions.IsAuthenticated]

    def post(self, request: Any) -> Response:
        serializer = EvalRequestSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        data = serializer.validated_data
        try:
            ctx = serializer.context_for()
            operation = data["operation"]
            if operation == "mul":
                result = ctx.to_json(ctx.multiply(
                    serializer.element(ctx, data["lhs"]),
                    serializer.element(ctx, data["rhs"]),
                ))
            elif operation == "dl-dist":
                result = {"distance": ctx.dl_distance(
                    serializer.element(ctx, data["lhs"]),
                    serializer.element(ctx, data["rhs"]),
                )}
            else:
                g = serializer.element(ctx, data["element"])
                if operation == "inv":
                    result = ctx.to_json(ctx.inverse(g))
                elif operation == "len":
                    result = ctx.length(g)
                elif operation == "bounds":
                    result = ctx.bounds(g, data["metric"])
                else:
                    result = ctx.oracle_length(g, data.get("radius"))
        except ConjForgeError as exc:
            return _error(exc)
        return Response(result, status=status.HTTP_200_OK)


class ConjugacyAPIView(APIView):
    """
    POST: decide conjugacy of u and v, optionally cross-checked by the
    brute-force oracle.
    """

    permission_classes = [permissions.IsAuthenticated]

    def post(self, request: Any) -> Response:
        serializer = ConjugacyRequestSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        data = serializer.validated_data
        try:
            ctx = serializer.context_for()
            u = serializer.element(ctx, data["u"])
            v = serializer.element(ctx, data["v"])
            report = conjugacy_report(ctx, u, v)
            if data["oracle"]:
                report["oracle"] = oracle_check(ctx, u, v, report["conjugate"])
        except ConjForgeError as exc:
            return _error(exc)
        return Response(report, status=status.HTTP_200_OK)


class AuditRunListCreateAPIView(generics.ListCreateAPIView):
    """
    GET: recorded audit runs, newest first.

    POST: run a small audit synchronously and record it.
    """

    queryset = AuditRun.objects.all()
    permission_classes = [permissions.IsAuthenticated]

    def get_serializer_class(self) -> Any:  # type: ignore[override]
        if self.request.method == "POST":
            return AuditRequestSerializer
        return AuditRunListSerializer

    def create(self, request: Any, *args: Any, **kwargs: Any) -> Response:
        serializer = AuditRequestSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        data = serializer.validated_data
        try:
            report = run_audit(
                serializer.context_for(),
                data["samples"],
                data["seed"],
                data["max_len"],
                workers=1,
            )
        except ConjForgeError as exc:
            return _error(exc)
        run = AuditRun.from_report(report)
        run.save()
        return Response(
            AuditRunDetailSerializer(run).data, status=status.HTTP_201_CREATED
        )


class AuditRunDetailAPIView(generics.RetrieveAPIView):
    queryset = AuditRun.objects.all()
    serializer_class = AuditRunDetailSerializer
    permission_classes = [permissions.IsAuthenticated]
