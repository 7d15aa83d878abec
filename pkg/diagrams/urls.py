from django.urls import path
from .views import glue_pair, list_tableaux, list_weights

urlpatterns = [
    path('weights/', list_weights, name='diagram-weights'),
    path('tableaux/', list_tableaux, name='diagram-tableaux'),
    path('glue/', glue_pair, name='diagram-glue'),
]
