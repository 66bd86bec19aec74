"""HTTP service wrapping the library; the CLI reuses its handlers in-process."""

from .app import app, create_app

__all__ = ["app", "create_app"]
