"""Translate engine errors into HTTP errors."""

from fastapi import HTTPException

from dlcoh.core.errors import BudgetExhaustedError, DLCohError


def to_http(exc: DLCohError) -> HTTPException:
    detail: object = str(exc)
    if isinstance(exc, BudgetExhaustedError) and exc.trace is not None:
        detail = {"message": str(exc), "trace": exc.trace.to_text().splitlines()}
    return HTTPException(status_code=exc.http_status, detail=detail)
