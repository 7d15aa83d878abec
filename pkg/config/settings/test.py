"""
Test settings: in-memory database, quiet logging, serial fan-out.
"""
from .base import *

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': ':memory:',
    }
}

ARC_ALGEBRA_WORKERS = 1

LOGGING['root']['level'] = 'WARNING'
