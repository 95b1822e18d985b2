from pydantic import BaseModel, Field

from app.criticality.service import CriticalityVerdict
from app.graphs.schemas import GraphInput, GraphSummary


class ClassifyRequest(BaseModel):
    """Schema for a criticality query"""
    graph: GraphInput
    theta: str = Field(..., min_length=1, max_length=1000, description="Monic minimal polynomial of theta, e.g. x-1")


class VertexVerdict(BaseModel):
    vertex: int = Field(..., ge=0)
    kind: str = Field(..., description="essential, neutral or positive")
    special: bool = Field(..., description="Non-essential with an essential neighbour")
    delta: int = Field(..., description="m(theta, G - u) - m(theta, G)")


class Verdict(BaseModel):
    """Schema for the vertex classification of a graph at theta"""
    graph: GraphSummary
    theta: str
    irreducibility_verified: bool
    is_root: bool
    multiplicity: int = Field(..., ge=0)
    critical: bool
    vertices: list[VertexVerdict] = Field(default_factory=list)

    @classmethod
    def of(cls, verdict: CriticalityVerdict) -> "Verdict":
        return cls(
            graph=GraphSummary.of(verdict.graph),
            theta=verdict.theta.to_text(),
            irreducibility_verified=verdict.theta.irreducibility_verified,
            is_root=verdict.is_root,
            multiplicity=verdict.multiplicity,
            critical=verdict.critical,
            vertices=[
                VertexVerdict(vertex=v, kind=c.kind.value, special=c.special, delta=c.delta)
                for v, c in sorted(verdict.classes.items())
            ],
        )


class CriticalResult(BaseModel):
    graph: GraphSummary
    theta: str
    critical: bool
