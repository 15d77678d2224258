import logging

from fastapi import APIRouter
from pydantic import Field

from app.schemas.base import BaseSchema
from app.schemas.ea import EaConfig, SolveReport
from app.schemas.graph import GraphDocument
from app.services.engine import solve_local
from app.services.graph_io import graph_from_document

router = APIRouter()
logger = logging.getLogger(__name__)


class SolveRequest(BaseSchema):
    graph: GraphDocument
    config: EaConfig
    threads: int = Field(default=1, ge=1, le=64)
    record_trajectory: bool = False


@router.post("", response_model=SolveReport)
async def solve(request: SolveRequest) -> SolveReport:
    '''Run the evolutionary solver in-process'''
    g = graph_from_document(request.graph)
    logger.info(f"Solving n={g.n} with dmax={request.config.dmax}, {request.config.max_iterations} iterations")
    return await solve_local(g, request.config, threads=request.threads, record_trajectory=request.record_trajectory)
