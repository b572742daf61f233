"""Weyl group endpoints."""

from typing import Any

from fastapi import APIRouter, Query
from fastapi.concurrency import run_in_threadpool

from api.core.errors import to_http
from dlcoh import services
from dlcoh.core.errors import DLCohError
from dlcoh.schemas.reports import WeylSummary

router = APIRouter()


@router.get("/weyl", response_model=WeylSummary)
async def get_weyl_summary(
    n: int = Query(..., ge=1),
    word: str = Query(default="", description="Comma-separated generator indices"),
) -> Any:
    """Length, support, height and Geck-Pfeiffer reduction of an element."""
    try:
        return await run_in_threadpool(services.weyl_summary, n, services.parse_letters(word))
    except DLCohError as exc:
        raise to_http(exc) from exc
