"""FastAPI service wrapping the spectral calculus.

Run with ``uvicorn fermispec.service:app``.
"""

from .routes import app

__all__ = ["app"]
