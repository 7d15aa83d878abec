from django.apps import AppConfig

class ArcAlgebraConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'arc_algebra'
    verbose_name = 'Алгебра дуг'
