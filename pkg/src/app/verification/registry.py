from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from exceptions import UnknownClaimError


@dataclass
class CensusReport:
    """Outcome of one claim run; the claim holds iff ``violations`` is empty."""

    claim: str
    params: dict[str, Any]
    scanned: int = 0
    witnesses: list[dict] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Claim:
    id: str
    summary: str
    runner: Callable[..., None]
    defaults: dict[str, Any] = field(default_factory=dict)


CLAIMS: dict[str, Claim] = {}


def claim(claim_id: str, summary: str, **defaults: Any):
    """Register a claim runner under a stable id with its default parameters."""

    def decorator(func):
        CLAIMS[claim_id] = Claim(id=claim_id, summary=summary, runner=func, defaults=defaults)
        return func

    return decorator


def get_claim(claim_id: str) -> Claim:
    try:
        return CLAIMS[claim_id]
    except KeyError:
        raise UnknownClaimError(claim_id, CLAIMS) from None
