"""Complex export endpoints."""

from typing import Any

from fastapi import APIRouter
from fastapi.concurrency import run_in_threadpool

from api.core.errors import to_http
from api.schemas.requests import ComplexRequest
from dlcoh import services
from dlcoh.core.errors import DLCohError
from dlcoh.schemas.reports import ComplexExport

router = APIRouter()


@router.post("/complex", response_model=ComplexExport)
async def export_complex(request: ComplexRequest) -> Any:
    """The permutation-module complex of a distinct-letter word, with optional homology."""
    try:
        C = await run_in_threadpool(
            services.build_complex, request.n, request.q, request.word, request.p, request.m
        )
        return await run_in_threadpool(services.export_complex, C, request.homology, request.p, request.m)
    except DLCohError as exc:
        raise to_http(exc) from exc
