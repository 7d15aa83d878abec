from django.apps import AppConfig

class KtheoryConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'ktheory'
    verbose_name = 'Группа Гротендика'
