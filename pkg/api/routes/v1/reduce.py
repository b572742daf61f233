"""Word reduction endpoints."""

from typing import Any

from fastapi import APIRouter
from fastapi.concurrency import run_in_threadpool

from api.core.errors import to_http
from api.schemas.requests import ReduceRequest
from dlcoh import services
from dlcoh.core.errors import DLCohError
from dlcoh.schemas.reports import ReduceResult

router = APIRouter()


@router.post("/reduce", response_model=ReduceResult)
async def reduce_word(request: ReduceRequest) -> Any:
    """Rewrite a word to distinct letters and return the trace."""
    try:
        return await run_in_threadpool(services.reduce_word, request.n, request.word, request.budget)
    except DLCohError as exc:
        raise to_http(exc) from exc
