from typing import Any, Optional
from pydantic import BaseModel, Field


class ClaimInfo(BaseModel):
    """Schema for a registered claim"""
    id: str
    summary: str
    defaults: dict[str, Any] = Field(default_factory=dict, description="Parameters and their defaults")


class ClaimRun(BaseModel):
    """Schema for running a claim"""
    params: dict[str, Any] = Field(default_factory=dict, description="Overrides of the claim defaults")
    jobs: int = Field(1, ge=1, le=64, description="Worker processes for the census")


class Report(BaseModel):
    """Schema for a census report; the claim holds iff violations is empty"""
    claim: str
    params: dict[str, Any]
    scanned: int = Field(..., ge=0)
    witnesses: list[dict[str, Any]] = Field(default_factory=list)
    violations: list[dict[str, Any]] = Field(default_factory=list)
    elapsed_ms: int = Field(..., ge=0)
    passed: bool


class JobSubmitted(BaseModel):
    job_id: str
    claim: str


class JobStatus(BaseModel):
    """Schema for a background claim run"""
    job_id: str
    state: str = Field(..., description="Celery task state, e.g. PENDING, SUCCESS, FAILURE")
    report: Optional[Report] = None
    error: Optional[str] = None
