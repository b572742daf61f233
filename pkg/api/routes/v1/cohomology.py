"""Cohomology report endpoints."""

from typing import Any

from fastapi import APIRouter
from fastapi.concurrency import run_in_threadpool

from api.core.errors import to_http
from api.schemas.requests import CohomologyRequest
from dlcoh import services
from dlcoh.core.errors import DLCohError
from dlcoh.schemas.reports import CohomologyReport

router = APIRouter()


@router.post("/cohomology", response_model=CohomologyReport)
async def get_cohomology(request: CohomologyRequest) -> Any:
    """Cohomology of the variety of a word, degree by degree."""
    try:
        return await run_in_threadpool(
            services.cohomology_report,
            n=request.n,
            q=request.q,
            letters=request.word,
            coeff=request.coeff,
            variety=request.variety,
            p=request.p,
            m=request.m,
            run_cross_check=request.cross_check,
        )
    except DLCohError as exc:
        raise to_http(exc) from exc
