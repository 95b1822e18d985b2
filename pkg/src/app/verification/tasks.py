"""Celery tasks running verification claims in a worker."""
from typing import Any, Optional

from celery import Task

from celery_app import celery_app

from app.verification.service import get_verification_service
from logger import get_logger

logger = get_logger(__name__)


@celery_app.task(bind=True, name="run_claim")
def run_claim(self: Task, claim_id: str, params: Optional[dict[str, Any]] = None, jobs: int = 1) -> dict:
    """
    Run one registered claim with the worker's native generators.

    Returns the report as a JSON-ready dict; domain errors propagate and
    mark the task as failed.
    """
    logger.info(f"Worker picked claim {claim_id}", extra={"task_id": self.request.id})
    report = get_verification_service().run(claim_id, params, jobs=jobs)
    return {**report.to_dict(), "passed": report.passed}
