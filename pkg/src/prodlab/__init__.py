"""prodlab: exact-arithmetic checks of productive sequences in topological groups."""

from .main import app

__version__ = "0.1.0"

__all__ = ["app", "__version__"]
