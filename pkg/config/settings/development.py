"""
Development settings for the springer_lab project.
"""
from .base import *

DEBUG = True
