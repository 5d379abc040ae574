from .base import types, helpers, linalg, algebra, modules, envelope
from . import applications
