import django_filters
from django.db import models
from .models import CheckRun

class CheckRunFilter(django_filters.FilterSet):
    created_at = django_filters.DateFromToRangeFilter()

    class Meta:
        model = CheckRun
        fields = ['kind', 'n', 'k', 'alpha', 'basis_filter', 'passed', 'witness', 'created_at']
        filter_overrides = {
            models.JSONField: {
                'filter_class': django_filters.CharFilter,
                'extra': lambda f: {
                    'lookup_expr': 'icontains',
                },
            },
        }
