from typing import Any, Iterable, Optional

from app.graphs.graph import Graph
from app.verification import bounds, catalogue, properties  # noqa: F401  (claim registration)
from app.verification.census import Census
from app.verification.registry import CLAIMS, Claim, CensusReport, get_claim
from exceptions import ArgumentError
from logger import get_logger

logger = get_logger(__name__)


def _coerce(name: str, value: Any, default: Any) -> Any:
    """Cast a textual parameter to the type of its default."""
    if default is None or value is None or not isinstance(value, str):
        return value
    try:
        if isinstance(default, bool):
            return value.lower() in ("1", "true", "yes")
        if isinstance(default, int):
            return int(value)
    except ValueError:
        raise ArgumentError(f"parameter {name} expects an integer, got {value!r}") from None
    return value


class VerificationService:
    """Runs registered claims against native or external graph streams."""

    def list_claims(self) -> list[Claim]:
        return [CLAIMS[key] for key in sorted(CLAIMS)]

    def resolve_params(self, claim: Claim, params: Optional[dict[str, Any]] = None) -> dict[str, Any]:
        params = dict(params or {})
        unknown = sorted(set(params) - set(claim.defaults))
        if unknown:
            raise ArgumentError(
                f"claim {claim.id} does not take {', '.join(unknown)}; "
                f"parameters: {', '.join(sorted(claim.defaults)) or 'none'}"
            )
        return {
            name: _coerce(name, params.get(name, default), default)
            for name, default in claim.defaults.items()
        }

    def run(
        self,
        claim_id: str,
        params: Optional[dict[str, Any]] = None,
        source: Optional[Iterable[Graph]] = None,
        jobs: int = 1,
    ) -> CensusReport:
        claim = get_claim(claim_id)
        resolved = self.resolve_params(claim, params)
        logger.info(f"Running claim {claim.id}", extra={"params": resolved, "jobs": jobs})
        census = Census(claim.id, resolved, source=source, jobs=jobs)
        claim.runner(census)
        return census.finish()


_service: Optional[VerificationService] = None


def get_verification_service() -> VerificationService:
    global _service
    if _service is None:
        _service = VerificationService()
    return _service
