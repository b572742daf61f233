"""Configuration, logging and error types shared by the engine."""

from .config import Settings, get_settings
from .errors import (
    BoundExceededError,
    BudgetExhaustedError,
    CoefficientError,
    DLCohError,
    InvalidInputError,
    VerificationError,
)
from .logging import configure_logging, get_logger

__all__ = [
    "Settings",
    "get_settings",
    "DLCohError",
    "InvalidInputError",
    "CoefficientError",
    "BoundExceededError",
    "BudgetExhaustedError",
    "VerificationError",
    "configure_logging",
    "get_logger",
]
