from rest_framework.decorators import api_view, permission_classes
from rest_framework.permissions import AllowAny
from rest_framework.response import Response

from .serializers import GradedDimSerializer, IntersectionQuerySerializer, PresentationSerializer
from .services import CohomologyService
from .types import Intersection


@api_view(['GET'])
@permission_classes([AllowAny])
def intersection(request):
    """Когомологии пересечения двух устойчивых многообразий"""
    query = IntersectionQuerySerializer(data=request.query_params)
    query.is_valid(raise_exception=True)
    w, w2 = query.validated_data['w'], query.validated_data['w2']
    result = CohomologyService.intersection_cohomology(w, w2)
    poincare = CohomologyService.poincare(w, w2, shifted=query.validated_data['shifted'])
    return Response({
        'w': str(w),
        'w2': str(w2),
        'empty': result is Intersection.EMPTY,
        'presentation': None if result is Intersection.EMPTY else PresentationSerializer(result).data,
        'poincare': GradedDimSerializer(poincare).data,
    })
