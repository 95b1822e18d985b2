import asyncio
from typing import Optional

from celery.result import AsyncResult
from fastapi import HTTPException, status
from fastapi.concurrency import run_in_threadpool

from app.verification import schemas
from app.verification.registry import get_claim
from app.verification.service import VerificationService, get_verification_service
from app.verification.tasks import run_claim
from celery_app import celery_app
from config import settings
from logger import get_logger
from metrics.computation import create_component_metrics
from utils.errors_handler import handle_domain_error

logger = get_logger(__name__)

verification_metrics = create_component_metrics("verification")


class VerificationManager:
    """Manager for claim runs, inline or through the Celery worker"""

    def __init__(self, service: Optional[VerificationService] = None):
        self.service = service or get_verification_service()

    def list_claims(self) -> list[schemas.ClaimInfo]:
        return [
            schemas.ClaimInfo(id=c.id, summary=c.summary, defaults=c.defaults)
            for c in self.service.list_claims()
        ]

    @handle_domain_error
    @verification_metrics("run")
    async def run(self, claim_id: str, request: schemas.ClaimRun) -> schemas.Report:
        report = await run_in_threadpool(
            self.service.run, claim_id, request.params, None, request.jobs
        )
        return schemas.Report(**report.to_dict(), passed=report.passed)

    @handle_domain_error
    async def submit(self, claim_id: str, request: schemas.ClaimRun) -> schemas.JobSubmitted:
        claim = get_claim(claim_id)
        params = self.service.resolve_params(claim, request.params)
        logger.info("Submitting claim to Celery", extra={"claim": claim.id})
        try:
            result = await asyncio.wait_for(
                asyncio.to_thread(
                    run_claim.apply_async,
                    args=[claim.id, params, request.jobs],
                    retry=False,
                ),
                timeout=settings.celery_publish_timeout_seconds,
            )
        except Exception as e:
            logger.error(f"Failed to submit Celery task: {e}", extra={"claim": claim.id})
            raise HTTPException(
                status_code=status.HTTP_503_SERVICE_UNAVAILABLE,
                detail="Task queue is unavailable"
            )
        return schemas.JobSubmitted(job_id=result.id, claim=claim.id)

    def job_status(self, job_id: str) -> schemas.JobStatus:
        result = AsyncResult(job_id, app=celery_app)
        state = result.state
        if state == "SUCCESS":
            return schemas.JobStatus(job_id=job_id, state=state, report=schemas.Report(**result.result))
        if state == "FAILURE":
            return schemas.JobStatus(job_id=job_id, state=state, error=str(result.result))
        return schemas.JobStatus(job_id=job_id, state=state)
