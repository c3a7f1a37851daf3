"""Exception types shared across the package."""

from __future__ import annotations

__all__ = ["ConfigError", "RegimeError", "QuadratureError"]


class ConfigError(ValueError):
    """Invalid configuration or domain-type construction.

    Messages carry the offending field names so CLI users can locate the
    problem in their config document.
    """


class RegimeError(ValueError):
    """A closed-form regime was requested outside its validity window.

    Raised instead of silently extrapolating a classical or quantum
    asymptotic formula.
    """


class QuadratureError(RuntimeError):
    """Numerical integration failed to reach the requested tolerance.

    The achieved error estimate, when available, is stored in ``estimate``.
    """

    def __init__(self, message: str, estimate: float | None = None):
        super().__init__(message)
        self.estimate = estimate
