"""
errors.py
---------
Exception hierarchy for sqfreg.

Every failure the toolkit raises on purpose derives from ``SqfregError`` so the
CLI can map it to an exit code in one place (see ``cli.EXIT_CODES``).
"""
from __future__ import annotations

from typing import Any, Dict, Optional


class SqfregError(Exception):
    """Base class for every deliberate sqfreg failure."""


class Graph6Error(SqfregError, ValueError):
    """Malformed graph6 record or edge-list text."""


class ConfigError(SqfregError, ValueError):
    """Invalid configuration value (env var or CLI flag)."""


class PreconditionError(SqfregError, ValueError):
    """An operation was called outside its documented domain."""


class CapExceededError(SqfregError):
    """Instance is larger than the configured exact-computation cap."""

    def __init__(self, message: str, *, size: int, cap: int):
        super().__init__(message)
        self.size = size
        self.cap = cap


class TheoremViolation(SqfregError):
    """An exhaustive search contradicted a proven statement.

    Either the implementation is wrong or the statement is; both must surface.
    """

    def __init__(self, message: str, payload: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.payload: Dict[str, Any] = dict(payload or {})


class InvariantError(SqfregError):
    """Two independent computations of the same quantity disagree."""

    def __init__(self, message: str, payload: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.payload: Dict[str, Any] = dict(payload or {})
