from typing import Any, Optional
from pydantic import BaseModel, Field, model_validator

from app.graphs.canonical import canonical_graph6
from app.graphs.graph import Graph
from app.graphs.graph6 import write_graph6


class GraphInput(BaseModel):
    """A graph given either as graph6 text or as a named family member"""
    graph6: Optional[str] = Field(None, min_length=1, max_length=100_000, description="graph6 text (header optional)")
    family: Optional[str] = Field(None, min_length=1, max_length=32, description="Family name, e.g. 'W' or 'Gstar'")
    n: Optional[int] = Field(None, ge=1, le=10_000, description="Order of the family member")
    params: dict[str, Any] = Field(default_factory=dict, description="Extra family parameters")

    @model_validator(mode="after")
    def exactly_one_source(self) -> "GraphInput":
        if (self.graph6 is None) == (self.family is None):
            raise ValueError("give exactly one of 'graph6' and 'family'")
        return self


class GraphSummary(BaseModel):
    """Basic facts about a graph"""
    graph6: str = Field(..., description="graph6 text as labelled")
    canonical_graph6: str = Field(..., description="graph6 of the canonical form")
    n: int = Field(..., ge=0, description="Number of vertices")
    m: int = Field(..., ge=0, description="Number of edges")
    connected: bool = Field(..., description="Whether the graph is connected")
    edges: list[tuple[int, int]] = Field(default_factory=list, description="Edge list, u < v")

    @classmethod
    def of(cls, graph: Graph) -> "GraphSummary":
        return cls(
            graph6=write_graph6(graph),
            canonical_graph6=canonical_graph6(graph),
            n=graph.n,
            m=graph.m,
            connected=graph.n > 0 and graph.is_connected(),
            edges=graph.edges(),
        )
