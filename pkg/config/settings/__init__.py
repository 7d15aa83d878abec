# config/settings/__init__.py
# По умолчанию используем настройки для разработки
from .development import *
