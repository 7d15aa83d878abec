from django_filters.rest_framework import DjangoFilterBackend
from drf_yasg.utils import swagger_auto_schema
from rest_framework import filters, generics
from rest_framework.decorators import api_view, permission_classes
from rest_framework.permissions import AllowAny
from rest_framework.response import Response

from .filters import CheckRunFilter
from .models import CheckRun
from .serializers import (
    CartanMatrixSerializer,
    CartanQuerySerializer,
    CheckRunSerializer,
    ElementSerializer,
    MultiplySerializer,
)
from .services import AlgebraService


@swagger_auto_schema(method='post', request_body=MultiplySerializer, operation_summary='Произведение двух элементов')
@api_view(['POST'])
@permission_classes([AllowAny])
def multiply(request):
    serializer = MultiplySerializer(data=request.data)
    serializer.is_valid(raise_exception=True)
    data = serializer.validated_data
    left, right = data['left']['element'], data['right']['element']
    if data['nested']:
        product = AlgebraService.multiply_nested(left, right, data['order'])
    else:
        product = AlgebraService.multiply(left, right, data['alpha'], data['order'])
    return Response(ElementSerializer(product).data)


@api_view(['GET'])
@permission_classes([AllowAny])
def cartan(request):
    """Градуированные размерности всех пространств Hom"""
    query = CartanQuerySerializer(data=request.query_params)
    query.is_valid(raise_exception=True)
    matrix = AlgebraService.cartan_matrix(query.validated_data['shape'], query.validated_data['basis_filter'])
    return Response(CartanMatrixSerializer(matrix).data)


class CheckRunListView(generics.ListAPIView):
    """Список запусков проверок"""
    queryset = CheckRun.objects.all()
    serializer_class = CheckRunSerializer
    permission_classes = [AllowAny]
    filter_backends = [DjangoFilterBackend, filters.OrderingFilter]
    filterset_class = CheckRunFilter
    ordering_fields = ['created_at', 'elapsed_seconds']
