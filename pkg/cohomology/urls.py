from django.urls import path
from .views import intersection

urlpatterns = [
    path('intersection/', intersection, name='cohomology-intersection'),
]
