from typing import Optional

from fastapi.concurrency import run_in_threadpool

from app.families.manager import resolve_graph
from app.families.service import FamiliesService
from app.graphs.schemas import GraphInput, GraphSummary
from app.matching import schemas
from app.matching.path_tree import verify_path_tree_divisibility
from app.matching.service import MatchingService
from app.polynomials.factorization import irreducible_factors
from app.polynomials.polynomial import IntPolynomial
from app.polynomials.sturm import count_real_roots_with_multiplicity
from exceptions import ArgumentError
from metrics.computation import create_component_metrics
from utils.errors_handler import handle_domain_error

polynomial_metrics = create_component_metrics("polynomials")


class PolynomialsManager:
    """Manager for matching polynomials and polynomial utilities"""

    def __init__(self):
        self.families = FamiliesService()

    @handle_domain_error
    @polynomial_metrics("matching_polynomial")
    async def matching_polynomial(
        self, engine: MatchingService, source: GraphInput
    ) -> schemas.MatchingPolynomial:
        graph = resolve_graph(source, self.families)
        poly = await run_in_threadpool(engine.matching_polynomial, graph)
        counts = [abs(poly.coefficient(graph.n - 2 * k)) for k in range(graph.n // 2 + 1)]
        return schemas.MatchingPolynomial(
            graph=GraphSummary.of(graph),
            polynomial=poly.to_text(),
            coefficients=list(poly.coeffs),
            matching_counts=counts,
        )

    @handle_domain_error
    @polynomial_metrics("factor")
    async def factor(self, request: schemas.PolynomialText) -> schemas.Factorization:
        poly = IntPolynomial.parse(request.polynomial)
        if poly.is_zero():
            raise ArgumentError("the zero polynomial cannot be factored")
        factors = await run_in_threadpool(irreducible_factors, poly)
        real = count_real_roots_with_multiplicity(poly)
        return schemas.Factorization(
            polynomial=poly.to_text(),
            factors=[
                schemas.IrreducibleFactor(
                    factor=f.poly.to_text(), multiplicity=f.multiplicity, verified=f.verified
                )
                for f in factors
            ],
            real_roots=real,
            real_rooted=real == poly.degree,
        )

    @handle_domain_error
    @polynomial_metrics("max_multiplicity")
    async def max_multiplicity(
        self, engine: MatchingService, source: GraphInput
    ) -> schemas.MaxMultiplicity:
        graph = resolve_graph(source, self.families)
        k, factor = await run_in_threadpool(engine.max_nonzero_root_multiplicity, graph)
        return schemas.MaxMultiplicity(
            graph=GraphSummary.of(graph),
            multiplicity=k,
            factor=factor.to_text() if factor is not None else None,
        )

    @handle_domain_error
    @polynomial_metrics("path_tree")
    async def path_tree(
        self, engine: MatchingService, request: schemas.PathTreeRequest
    ) -> schemas.PathTreeResult:
        graph = resolve_graph(request.graph, self.families)
        check = await run_in_threadpool(verify_path_tree_divisibility, graph, request.u, engine)
        quotient: Optional[str] = check.quotient.to_text() if check.quotient is not None else None
        return schemas.PathTreeResult(
            tree_order=check.tree_order,
            divisible=check.divisible,
            quotient=quotient,
            quotient_identity=check.quotient_identity,
        )
