from enum import Enum
from typing import Optional
from pydantic import BaseModel, Field

from app.graphs.schemas import GraphSummary


class GraphKind(str, Enum):
    TREES = "trees"
    CONNECTED = "connected"


class NThetaRequest(BaseModel):
    """Schema for the minimum-order search"""
    theta: str = Field(..., min_length=1, max_length=1000, description="Monic minimal polynomial of theta")
    n_max: Optional[int] = Field(None, ge=1, le=9, description="Largest order searched")


class NThetaResult(BaseModel):
    """Schema for n_theta and the catalogue of graphs attaining it"""
    theta: str
    found: bool
    n_theta: Optional[int] = Field(None, description="Smallest order with m(theta, G) = 1")
    graphs: list[GraphSummary] = Field(default_factory=list)
    scanned: dict[int, int] = Field(default_factory=dict, description="Graphs scanned per order")
    anomalies: list[dict] = Field(default_factory=list)
