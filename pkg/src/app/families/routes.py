from typing import List
from fastapi import APIRouter, Query

from app.families import schemas
from app.families.manager import FamiliesManager

router = APIRouter(prefix="/families", tags=["families"])

families_manager = FamiliesManager()


@router.get("", response_model=List[str])
async def list_families() -> List[str]:
    """
    Names accepted wherever a family is expected
    """
    return families_manager.list_families()


@router.post("/build", response_model=schemas.FamilyMember)
async def build_family_member(request: schemas.FamilyRequest) -> schemas.FamilyMember:
    """
    Build one named graph, e.g. {"name": "W", "n": 9} or {"name": "Q", "params": {"theta": "x^2-3"}}
    """
    return await families_manager.build(request)


@router.get("/hub/members", response_model=schemas.MemberSet)
async def get_hub_members(
    n: int = Query(..., ge=7, le=15, description="Order of the members"),
) -> schemas.MemberSet:
    """
    Every member of the hub family of order n, one per isomorphism class
    """
    return await families_manager.hub_members(n)


@router.get("/h/members", response_model=schemas.MemberSet)
async def get_h_members(
    theta: str = Query(..., min_length=1, description="Minimal polynomial of theta, e.g. x^2-3"),
    n: int = Query(..., ge=2, le=16, description="Order of the members"),
    t: int = Query(default=1, ge=1, le=4, description="Number of hub vertices"),
) -> schemas.MemberSet:
    """
    Every t-connected member of H^(n,t)_theta
    """
    return await families_manager.h_members(theta, n, t)


@router.post("/edge-addition", response_model=List[schemas.EdgeAdditionResult])
async def add_critical_edge(request: schemas.EdgeAdditionRequest) -> List[schemas.EdgeAdditionResult]:
    """
    Apply the 1-criticality preserving edge addition at u (or at every eligible vertex)
    """
    return await families_manager.add_edge(request)
