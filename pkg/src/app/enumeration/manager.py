from typing import Iterator, Optional

from fastapi.concurrency import run_in_threadpool

from app.criticality.service import CriticalityService
from app.enumeration import schemas
from app.enumeration.generators import enum_connected, enum_trees
from app.enumeration.service import EnumerationService, get_enumeration_service
from app.graphs.graph import Graph
from app.graphs.schemas import GraphSummary
from app.matching.service import MatchingService
from app.polynomials.algebraic import AlgebraicRoot
from metrics.computation import create_component_metrics
from utils.errors_handler import handle_domain_error
from utils.pagination import PaginatedResponse

enumeration_metrics = create_component_metrics("enumeration")


class EnumerationManager:
    """Manager for graph generation and the n_theta search"""

    def __init__(self, service: Optional[EnumerationService] = None):
        self.service = service or get_enumeration_service()
        # stream lengths keyed by (kind, n, minimal polynomial or None)
        self._totals: dict[tuple, int] = {}

    def _generate(
        self, engine: MatchingService, kind: schemas.GraphKind, n: int, theta: Optional[AlgebraicRoot]
    ) -> Iterator[Graph]:
        graphs = enum_trees(n) if kind is schemas.GraphKind.TREES else enum_connected(n)
        if theta is not None:
            filtering = EnumerationService(CriticalityService(engine))
            graphs = filtering.filter_critical(graphs, theta, jobs=1)
        return iter(graphs)

    def total_items(
        self, engine: MatchingService, kind: schemas.GraphKind, n: int, theta: Optional[AlgebraicRoot]
    ) -> int:
        key = (kind, n, theta.minpoly if theta is not None else None)
        if key not in self._totals:
            self._totals[key] = sum(1 for _ in self._generate(engine, kind, n, theta))
        return self._totals[key]

    def _page(
        self,
        engine: MatchingService,
        kind: schemas.GraphKind,
        n: int,
        page: int,
        page_size: int,
        filter_critical: Optional[str],
    ) -> PaginatedResponse[GraphSummary]:
        theta = AlgebraicRoot.parse(filter_critical) if filter_critical else None
        total = self.total_items(engine, kind, n, theta)
        summaries = (GraphSummary.of(g) for g in self._generate(engine, kind, n, theta))
        return PaginatedResponse.from_stream(summaries, page, page_size, total)

    @handle_domain_error
    @enumeration_metrics("enumerate")
    async def enumerate(
        self,
        engine: MatchingService,
        kind: schemas.GraphKind,
        n: int,
        page: int,
        page_size: int,
        filter_critical: Optional[str] = None,
    ) -> PaginatedResponse[GraphSummary]:
        return await run_in_threadpool(
            self._page, engine, kind, n, page, page_size, filter_critical
        )

    @handle_domain_error
    @enumeration_metrics("n_theta")
    async def n_theta(self, request: schemas.NThetaRequest) -> schemas.NThetaResult:
        theta = AlgebraicRoot.parse(request.theta)
        result = await run_in_threadpool(self.service.compute_n_theta, theta, request.n_max)
        return schemas.NThetaResult(
            theta=theta.to_text(),
            found=result.found,
            n_theta=result.n_theta,
            graphs=[GraphSummary.of(g) for g in result.graphs],
            scanned=result.scanned,
            anomalies=result.anomalies,
        )
