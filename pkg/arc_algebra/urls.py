from django.urls import path
from .views import CheckRunListView, cartan, multiply

urlpatterns = [
    path('multiply/', multiply, name='arc-algebra-multiply'),
    path('cartan/', cartan, name='arc-algebra-cartan'),
    path('check-runs/', CheckRunListView.as_view(), name='arc-algebra-check-runs'),
]
