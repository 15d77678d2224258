from typing import List

from fastapi import APIRouter
from pydantic import Field

from app.schemas.base import BaseSchema
from app.schemas.graph import DegreeConstraint, GraphDocument
from app.services.graph_io import graph_from_document
from app.services.verify import CheckResult, CheckStatus, VerifyOptions, run_verify

router = APIRouter()


class VerifyRequest(BaseSchema):
    graph: GraphDocument
    dmax: int = Field(ge=1)
    options: VerifyOptions = Field(default_factory=VerifyOptions)


class VerifyResponse(BaseSchema):
    passed: bool
    checks: List[CheckResult]


@router.post("", response_model=VerifyResponse)
async def verify(request: VerifyRequest) -> VerifyResponse:
    '''Run the invariant and oracle suite; failed checks are reported, not raised'''
    g = graph_from_document(request.graph)
    checks = await run_verify(g, DegreeConstraint(dmax=request.dmax), request.options)
    return VerifyResponse(
        passed=all(check.status != CheckStatus.FAILED for check in checks),
        checks=checks
    )
