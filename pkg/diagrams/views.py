from rest_framework.decorators import api_view, permission_classes
from rest_framework.permissions import AllowAny
from rest_framework.response import Response

from .rendering import render_circle, render_cup
from .serializers import (
    CircleDiagramSerializer,
    CupDiagramSerializer,
    GlueQuerySerializer,
    ShapeSerializer,
    TableauSerializer,
)
from .services import GluingService, TableauService, WeightService


@api_view(['GET'])
@permission_classes([AllowAny])
def list_weights(request):
    """Все веса формы (n-k, k)"""
    query = ShapeSerializer(data=request.query_params)
    query.is_valid(raise_exception=True)
    weights = WeightService.enumerate_weights(query.validated_data['shape'])
    return Response([
        {
            'index': index,
            'weight': str(w),
            'standard': w.is_standard,
            'm': CupDiagramSerializer(WeightService.weight_to_m(w)).data,
            'C': CupDiagramSerializer(WeightService.weight_to_C(w)).data,
        }
        for index, w in enumerate(weights, 1)
    ])


@api_view(['GET'])
@permission_classes([AllowAny])
def list_tableaux(request):
    """Стандартные таблицы и их диаграммы чашек"""
    query = ShapeSerializer(data=request.query_params)
    query.is_valid(raise_exception=True)
    result = []
    for tableau in TableauService.enumerate_standard(query.validated_data['shape']):
        diagram = TableauService.tableau_to_cup(tableau)
        result.append({
            'tableau': TableauSerializer(tableau).data,
            'weight': str(TableauService.weight_of(tableau)),
            'diagram': CupDiagramSerializer(diagram).data,
            'picture': render_cup(diagram),
            'fixed_points': [str(w) for w in TableauService.component_fixed_points(tableau)],
        })
    return Response(result)


@api_view(['GET'])
@permission_classes([AllowAny])
def glue_pair(request):
    """Склейка m(top) над m(bottom) и ее ориентации"""
    query = GlueQuerySerializer(data=request.query_params)
    query.is_valid(raise_exception=True)
    top, bottom = query.validated_data['top'], query.validated_data['bottom']
    glued = GluingService.glue_weights(bottom, top)
    orientations = GluingService.orientations(glued, bottom, top)
    return Response({
        'diagram': CircleDiagramSerializer(glued).data,
        'picture': render_circle(glued),
        'orientations': [str(o) for o in orientations],
    })
