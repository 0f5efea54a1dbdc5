"""HTTP service exposing instances, runs, fronts, Gantt data, and
aspiration sessions."""
from .app import create_app
from .jobs import RunManager

__all__ = ["create_app", "RunManager"]
