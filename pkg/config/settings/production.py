"""
Production settings for the springer_lab project.
"""
from decouple import config

from .base import *

DEBUG = False

# Security settings
SECURE_CONTENT_TYPE_NOSNIFF = True
SECURE_HSTS_INCLUDE_SUBDOMAINS = True
SECURE_HSTS_SECONDS = 31536000
SECURE_SSL_REDIRECT = config('SECURE_SSL_REDIRECT', default=True, cast=bool)
SESSION_COOKIE_SECURE = True
CSRF_COOKIE_SECURE = True

# Static files
STATICFILES_STORAGE = 'django.contrib.staticfiles.storage.ManifestStaticFilesStorage'

# Logging for production
SPRINGER_LOG_FILE = config('SPRINGER_LOG_FILE', default='')

if SPRINGER_LOG_FILE:
    LOGGING['handlers']['file'] = {
        'level': 'INFO',
        'class': 'logging.FileHandler',
        'filename': SPRINGER_LOG_FILE,
        'formatter': 'verbose',
    }
    LOGGING['root']['handlers'] = ['console', 'file']
