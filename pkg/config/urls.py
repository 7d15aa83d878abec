from django.contrib import admin
from django.urls import path, include
from rest_framework import permissions
from drf_yasg.views import get_schema_view
from drf_yasg import openapi

# Swagger schema view
schema_view = get_schema_view(
   openapi.Info(
      title="Springer Lab API",
      default_version='v1',
      description="Cup diagrams, intersection cohomology and the arc algebra of two-row Springer fibers",
      license=openapi.License(name="BSD License"),
   ),
   public=True,
   permission_classes=[permissions.AllowAny],
)

urlpatterns = [
    path('admin/', admin.site.urls),

    # API documentation
    path('swagger/', schema_view.with_ui('swagger', cache_timeout=0), name='schema-swagger-ui'),
    path('redoc/', schema_view.with_ui('redoc', cache_timeout=0), name='schema-redoc'),

    # App URLs
    path('api/diagrams/', include('diagrams.urls')),
    path('api/cohomology/', include('cohomology.urls')),
    path('api/arc-algebra/', include('arc_algebra.urls')),
    path('api/ktheory/', include('ktheory.urls')),
]
