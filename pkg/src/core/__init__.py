"""Shared building blocks: settings, logging, errors and rational linear algebra."""

from .config import Settings, load_settings, settings, use_settings
from .errors import (
    AlgebraError,
    DivergenceError,
    DomainError,
    InvariantViolation,
    ParseError,
    PreconditionError,
    ResourceLimitError,
)
from .linear import LinearCombination, format_coefficient
from .logger import get_logger, setup_logging

__all__ = [
    # Configuration
    "Settings",
    "load_settings",
    "settings",
    "use_settings",
    # Errors
    "AlgebraError",
    "DivergenceError",
    "DomainError",
    "InvariantViolation",
    "ParseError",
    "PreconditionError",
    "ResourceLimitError",
    # Algebra
    "LinearCombination",
    "format_coefficient",
    # Logging
    "get_logger",
    "setup_logging",
]
