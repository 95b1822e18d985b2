from typing import Optional
from fastapi import APIRouter, Request, Query

from app.enumeration import schemas
from app.enumeration.manager import EnumerationManager
from app.graphs.schemas import GraphSummary
from utils.pagination import PaginatedResponse

router = APIRouter(prefix="/enumeration", tags=["enumeration"])

enumeration_manager = EnumerationManager()


@router.get("/{kind}", response_model=PaginatedResponse[GraphSummary])
async def enumerate_graphs(
    request: Request,
    kind: schemas.GraphKind,
    n: int = Query(..., ge=1, le=8, description="Order of the generated graphs"),
    page: int = Query(default=1, ge=1, description="Page number (starts from 1)"),
    page_size: int = Query(default=20, ge=1, le=100, description="Number of items per page"),
    filter_critical: Optional[str] = Query(
        default=None, description="Keep only graphs critical for this minimal polynomial"
    ),
) -> PaginatedResponse[GraphSummary]:
    """
    One graph per isomorphism class, in generation order
    """
    return await enumeration_manager.enumerate(
        request.state.engine, kind, n, page, page_size, filter_critical
    )


@router.post("/n-theta", response_model=schemas.NThetaResult)
async def compute_n_theta(payload: schemas.NThetaRequest) -> schemas.NThetaResult:
    """
    Smallest order of a connected graph with m(theta, G) = 1, with all graphs attaining it
    """
    return await enumeration_manager.n_theta(payload)
