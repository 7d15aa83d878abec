import logging

from django.core.exceptions import ValidationError
from rest_framework import status
from rest_framework.response import Response
from rest_framework.views import exception_handler

logger = logging.getLogger(__name__)


def domain_exception_handler(exc, context):
    """Ошибки валидации предметной области превращаются в HTTP 400"""
    if isinstance(exc, ValidationError):
        logger.warning(f'Некорректный запрос к {context.get("view").__class__.__name__}: {exc}')
        return Response({'detail': str(exc)}, status=status.HTTP_400_BAD_REQUEST)
    return exception_handler(exc, context)
