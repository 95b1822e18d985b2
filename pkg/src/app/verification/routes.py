from typing import List
from fastapi import APIRouter

from app.verification import schemas
from app.verification.manager import VerificationManager

router = APIRouter(prefix="/verification", tags=["verification"])

verification_manager = VerificationManager()


@router.get("", response_model=List[schemas.ClaimInfo])
async def list_claims() -> List[schemas.ClaimInfo]:
    """
    Registered claims with their default parameters
    """
    return verification_manager.list_claims()


@router.get("/jobs/{job_id}", response_model=schemas.JobStatus)
async def get_job(job_id: str) -> schemas.JobStatus:
    """
    State of a background claim run, with its report once finished
    """
    return verification_manager.job_status(job_id)


@router.post("/{claim_id}", response_model=schemas.Report)
async def run_claim(claim_id: str, payload: schemas.ClaimRun) -> schemas.Report:
    """
    Run a claim in the request and return its report
    """
    return await verification_manager.run(claim_id, payload)


@router.post("/{claim_id}/jobs", response_model=schemas.JobSubmitted, status_code=202)
async def submit_claim(claim_id: str, payload: schemas.ClaimRun) -> schemas.JobSubmitted:
    """
    Queue a claim on the Celery worker
    """
    return await verification_manager.submit(claim_id, payload)
