from fastapi.concurrency import run_in_threadpool

from app.criticality import schemas
from app.criticality.service import CriticalityService
from app.families.manager import resolve_graph
from app.families.service import FamiliesService
from app.graphs.schemas import GraphSummary
from app.matching.service import MatchingService
from app.polynomials.algebraic import AlgebraicRoot
from exceptions import ArgumentError
from metrics.computation import create_component_metrics
from utils.errors_handler import handle_domain_error

criticality_metrics = create_component_metrics("criticality")


class CriticalityManager:
    """Manager for vertex classification and criticality decisions"""

    def __init__(self):
        self.families = FamiliesService()

    @handle_domain_error
    @criticality_metrics("classify")
    async def classify(
        self, engine: MatchingService, request: schemas.ClassifyRequest
    ) -> schemas.Verdict:
        graph = resolve_graph(request.graph, self.families)
        theta = AlgebraicRoot.parse(request.theta)
        verdict = await run_in_threadpool(CriticalityService(engine).classify_vertices, graph, theta)
        return schemas.Verdict.of(verdict)

    @handle_domain_error
    @criticality_metrics("is_critical")
    async def is_critical(
        self, engine: MatchingService, request: schemas.ClassifyRequest
    ) -> schemas.CriticalResult:
        graph = resolve_graph(request.graph, self.families)
        if graph.n == 0 or not graph.is_connected():
            raise ArgumentError("criticality is decided for connected graphs only")
        theta = AlgebraicRoot.parse(request.theta)
        critical = await run_in_threadpool(CriticalityService(engine).is_theta_critical, graph, theta)
        return schemas.CriticalResult(graph=GraphSummary.of(graph), theta=theta.to_text(), critical=critical)
