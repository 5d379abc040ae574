from . import types, helpers, linalg, algebra, modules, envelope
