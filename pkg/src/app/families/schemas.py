from typing import Any, Optional
from pydantic import BaseModel, Field

from app.graphs.schemas import GraphInput, GraphSummary


class FamilyRequest(BaseModel):
    """Schema for building a named family member"""
    name: str = Field(..., min_length=1, max_length=32, description="Family name")
    n: Optional[int] = Field(None, ge=1, le=10_000, description="Order, when the family is parameterised by it")
    params: dict[str, Any] = Field(default_factory=dict, description="Extra parameters (theta, k, pattern, ...)")


class FamilyMember(BaseModel):
    """Schema for a constructed family member"""
    family: dict[str, Any] = Field(..., description="The family parameters that were built")
    graph: GraphSummary


class MemberSet(BaseModel):
    """Complete member set up to isomorphism, sorted by canonical code"""
    family: str = Field(..., description="Family name")
    count: int = Field(..., ge=0, description="Number of isomorphism classes")
    members: list[GraphSummary] = Field(default_factory=list)


class EdgeAdditionRequest(BaseModel):
    """Schema for the edge-addition construction on a 1-critical graph"""
    graph: GraphInput
    u: Optional[int] = Field(None, ge=0, description="Cut vertex of degree three; all candidates when omitted")


class EdgeAdditionResult(BaseModel):
    u: int = Field(..., description="Vertex the construction was applied at")
    graph: GraphSummary
