from typing import Optional
from pydantic import BaseModel, Field

from app.graphs.schemas import GraphInput, GraphSummary


class MatchingPolynomial(BaseModel):
    """Schema for a computed matching polynomial"""
    graph: GraphSummary
    polynomial: str = Field(..., description="mu(G, x) in the polynomial text grammar")
    coefficients: list[int] = Field(..., description="Coefficients, constant term first")
    matching_counts: list[int] = Field(..., description="p_G(k) for k = 0..n//2")


class PolynomialText(BaseModel):
    polynomial: str = Field(..., min_length=1, max_length=100_000, description="e.g. x^5-5x^3+4x")


class IrreducibleFactor(BaseModel):
    factor: str
    multiplicity: int = Field(..., ge=1)
    verified: bool = Field(..., description="False when irreducibility could not be certified")


class Factorization(BaseModel):
    """Schema for the factorisation of a monic integer polynomial"""
    polynomial: str
    factors: list[IrreducibleFactor] = Field(default_factory=list)
    real_roots: int = Field(..., ge=0, description="Real roots counted with multiplicity")
    real_rooted: bool


class MaxMultiplicity(BaseModel):
    graph: GraphSummary
    multiplicity: int = Field(..., ge=0, description="Largest multiplicity of a nonzero root")
    factor: Optional[str] = Field(None, description="Squarefree factor carrying it")


class PathTreeRequest(BaseModel):
    graph: GraphInput
    u: int = Field(0, ge=0, description="Root vertex of the path tree")


class PathTreeResult(BaseModel):
    """Schema for the path-tree divisibility check"""
    tree_order: int = Field(..., ge=1)
    divisible: bool
    quotient: Optional[str] = Field(None, description="mu(T)/mu(G) when divisible")
    quotient_identity: bool
