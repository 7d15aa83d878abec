from django.http import HttpResponse
from rest_framework.decorators import api_view, permission_classes
from rest_framework.permissions import AllowAny
from rest_framework.response import Response

from .serializers import K0MatrixSerializer, K0QuerySerializer, k0_csv
from .services import GrothendieckService


@api_view(['GET'])
@permission_classes([AllowAny])
def k0_matrix(request):
    """Матрица перехода между [M_w] и [L_w]"""
    query = K0QuerySerializer(data=request.query_params)
    query.is_valid(raise_exception=True)
    data = K0MatrixSerializer(GrothendieckService.k0_matrix(query.validated_data['shape'])).data
    if query.validated_data['export'] == 'csv':
        return HttpResponse(k0_csv(data), content_type='text/csv; charset=utf-8')
    return Response(data)
