from fastapi.concurrency import run_in_threadpool

from app.families import schemas
from app.families.service import (
    FamiliesService,
    FamilyName,
    graph_from_source,
    members_sorted,
    spec_from_args,
)
from app.graphs.graph import Graph
from app.graphs.schemas import GraphInput, GraphSummary
from app.polynomials.algebraic import AlgebraicRoot
from exceptions import ArgumentError
from metrics.computation import create_component_metrics
from utils.errors_handler import handle_domain_error

families_metrics = create_component_metrics("families")


def resolve_graph(source: GraphInput, families: FamiliesService) -> Graph:
    return graph_from_source(families, source.graph6, source.family, source.n, source.params)


class FamiliesManager:
    """Manager for named graph families"""

    def __init__(self):
        self.service = FamiliesService()

    def list_families(self) -> list[str]:
        return [family.value for family in FamilyName]

    @handle_domain_error
    @families_metrics("build")
    async def build(self, request: schemas.FamilyRequest) -> schemas.FamilyMember:
        spec = spec_from_args(request.name, request.n, request.params)
        graph = await run_in_threadpool(self.service.make_named, spec)
        return schemas.FamilyMember(family=spec.describe(), graph=GraphSummary.of(graph))

    @handle_domain_error
    @families_metrics("hub_members")
    async def hub_members(self, n: int) -> schemas.MemberSet:
        members = await run_in_threadpool(self.service.f_family_members, n)
        return self._member_set(FamilyName.HUB.value, members_sorted(members))

    @handle_domain_error
    @families_metrics("h_members")
    async def h_members(self, theta: str, n: int, t: int) -> schemas.MemberSet:
        root = AlgebraicRoot.parse(theta)
        members = await run_in_threadpool(self.service.h_family_members, root, n, t)
        return self._member_set(FamilyName.H.value, members_sorted(members))

    @handle_domain_error
    @families_metrics("edge_addition")
    async def add_edge(self, request: schemas.EdgeAdditionRequest) -> list[schemas.EdgeAdditionResult]:
        graph = resolve_graph(request.graph, self.service)
        vertices = [request.u] if request.u is not None else list(self.service.edge_addition_candidates(graph))
        if not vertices:
            raise ArgumentError("no vertex meets the edge-addition preconditions")
        results = []
        for u in vertices:
            extended = await run_in_threadpool(self.service.add_critical_edge, graph, u)
            results.append(schemas.EdgeAdditionResult(u=u, graph=GraphSummary.of(extended)))
        return results

    @staticmethod
    def _member_set(name: str, graphs: list[Graph]) -> schemas.MemberSet:
        return schemas.MemberSet(
            family=name, count=len(graphs), members=[GraphSummary.of(g) for g in graphs]
        )
