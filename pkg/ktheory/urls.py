from django.urls import path
from .views import k0_matrix

urlpatterns = [
    path('k0/', k0_matrix, name='ktheory-k0'),
]
