from django.contrib import admin
from .models import CheckRun

@admin.register(CheckRun)
class CheckRunAdmin(admin.ModelAdmin):
    list_display = ['kind', 'n', 'k', 'alpha', 'basis_filter', 'passed', 'elapsed_seconds', 'created_at']
    list_filter = ['kind', 'passed', 'basis_filter', 'alpha', 'created_at']
    search_fields = ['kind']
    readonly_fields = ['created_at']
    date_hierarchy = 'created_at'
