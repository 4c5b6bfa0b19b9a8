"""Exception types used across the qrep package."""

from __future__ import annotations


class QrepError(Exception):
    """Base class for all qrep-specific errors."""


class ValidationError(QrepError):
    """Raised when user-supplied data fails structural validation."""


class ResourceLimitError(QrepError):
    """Raised when a computation exceeds a configured size or iteration cap."""


class ComputationError(QrepError):
    """Raised when an internal computation cannot be completed reliably."""
