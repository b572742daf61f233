"""Exception hierarchy of the engine.

Each class carries the process exit code the CLI maps it to and the HTTP
status the API answers with.
"""

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from dlcoh.monoid.rewriting import RewriteTrace


class DLCohError(Exception):
    """Base class for every engine failure."""

    exit_code: int = 1
    http_status: int = 500


class InvalidInputError(DLCohError, ValueError):
    """Malformed input or a violated precondition."""

    exit_code = 2
    http_status = 422


class CoefficientError(InvalidInputError):
    """Coefficient ring incompatible with the field of definition."""


class BoundExceededError(DLCohError):
    """A brute-force computation would exceed its configured bound."""

    exit_code = 3
    http_status = 413

    def __init__(self, what: str, size: int, bound: int):
        super().__init__(f"{what}: size {size} exceeds bound {bound}")
        self.what = what
        self.size = size
        self.bound = bound


class BudgetExhaustedError(DLCohError):
    """Word reduction ran out of steps; ``trace`` holds the work done so far."""

    exit_code = 4
    http_status = 422

    def __init__(self, message: str, trace: Optional["RewriteTrace"] = None):
        super().__init__(message)
        self.trace = trace


class VerificationError(DLCohError):
    """An internal certificate failed to check."""

    exit_code = 1
    http_status = 500
