from fastapi import APIRouter, Request

from app.criticality import schemas
from app.criticality.manager import CriticalityManager

router = APIRouter(prefix="/criticality", tags=["criticality"])

criticality_manager = CriticalityManager()


@router.post("/classify", response_model=schemas.Verdict)
async def classify_vertices(request: Request, payload: schemas.ClassifyRequest) -> schemas.Verdict:
    """
    Essential / neutral / positive class and speciality of every vertex
    """
    return await criticality_manager.classify(request.state.engine, payload)


@router.post("/critical", response_model=schemas.CriticalResult)
async def is_theta_critical(request: Request, payload: schemas.ClassifyRequest) -> schemas.CriticalResult:
    """
    Whether a connected graph is theta-critical
    """
    return await criticality_manager.is_critical(request.state.engine, payload)
