"""
URL configuration for the conjugacy forge project.

- /admin/     recorded audit runs
- /api/       eval, conjugacy and audit endpoints (DRF)
- /api-auth/  session login for the browsable API
"""

from django.contrib import admin
from django.urls import include, path

urlpatterns = [
    path("admin/", admin.site.urls),
    path("api/", include("api.urls")),
    path("api-auth/", include("rest_framework.urls")),
]
