from django.urls import path

from .views import (
    AuditRunDetailAPIView,
    AuditRunListCreateAPIView,
    ConjugacyAPIView,
    EvalAPIView,
)

urlpatterns = [
    path("eval/", EvalAPIView.as_view(), name="api_eval"),
    path("conjugacy/", ConjugacyAPIView.as_view(), name="api_conjugacy"),
    path(
        "audits/",
        AuditRunListCreateAPIView.as_view(),
        name="api_audit_list_create",
    ),
    path(
        "audits/<int:pk>/",
        AuditRunDetailAPIView.as_view(),
        name="api_audit_detail",
    ),
]
