from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from app.criticality.service import CriticalityService
from app.enumeration.generators import enum_connected
from app.graphs.graph import Graph
from app.graphs.graph6 import parse_graph6, write_graph6
from app.polynomials.algebraic import AlgebraicRoot
from app.polynomials.polynomial import IntPolynomial
from config import settings
from logger import get_logger

logger = get_logger(__name__)

GraphSource = Callable[[int], Iterable[Graph]]

_worker_service: Optional[CriticalityService] = None


def _critical_in_worker(job: tuple[str, str]) -> bool:
    """Process-pool entry point; each worker keeps its own engine and memo."""
    global _worker_service
    if _worker_service is None:
        _worker_service = CriticalityService()
    text, minpoly = job
    theta = AlgebraicRoot.from_minpoly(IntPolynomial.parse(minpoly))
    return _worker_service.is_theta_critical(parse_graph6(text), theta)


@dataclass(frozen=True)
class NThetaResult:
    """Outcome of the minimum-order search for graphs with m(theta, G) = 1."""

    theta: AlgebraicRoot
    n_theta: Optional[int]
    graphs: list[Graph]
    scanned: dict[int, int] = field(default_factory=dict)
    # orders where theta is a root with multiplicity other than 1
    anomalies: list[dict] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.n_theta is not None


class EnumerationService:
    def __init__(self, criticality: Optional[CriticalityService] = None) -> None:
        self.criticality = criticality or CriticalityService()
        self._n_theta: dict[tuple[IntPolynomial, int], NThetaResult] = {}

    def filter_critical(
        self,
        graphs: Iterable[Graph],
        theta: AlgebraicRoot,
        jobs: Optional[int] = None,
    ) -> Iterator[Graph]:
        """Lazily keep the theta-critical graphs; disconnected inputs are skipped.

        With jobs > 1 the decisions run in a process pool; output order
        still follows the input order.
        """
        jobs = settings.default_jobs if jobs is None else jobs
        if jobs <= 1:
            for graph in graphs:
                if graph.n and graph.is_connected() and self.criticality.is_theta_critical(graph, theta):
                    yield graph
            return
        connected = (g for g in graphs if g.n and g.is_connected())
        batch: list[Graph] = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for graph in connected:
                batch.append(graph)
                if len(batch) >= 256 * jobs:
                    yield from self._decide_batch(pool, batch, theta)
                    batch = []
            if batch:
                yield from self._decide_batch(pool, batch, theta)

    @staticmethod
    def _decide_batch(
        pool: ProcessPoolExecutor, batch: list[Graph], theta: AlgebraicRoot
    ) -> Iterator[Graph]:
        minpoly = theta.to_text()
        jobs = [(write_graph6(g), minpoly) for g in batch]
        for graph, critical in zip(batch, pool.map(_critical_in_worker, jobs, chunksize=32)):
            if critical:
                yield graph

    def compute_n_theta(
        self,
        theta: AlgebraicRoot,
        n_max: Optional[int] = None,
        source: Optional[GraphSource] = None,
    ) -> NThetaResult:
        """Smallest order carrying a connected graph with m(theta, G) = 1, and all such graphs."""
        n_max = settings.n_theta_max_order if n_max is None else n_max
        key = (theta.minpoly, n_max)
        if source is None and key in self._n_theta:
            return self._n_theta[key]
        generate = source or enum_connected
        scanned: dict[int, int] = {}
        anomalies: list[dict] = []
        result = None
        for n in range(1, n_max + 1):
            hits = []
            count = 0
            for graph in generate(n):
                count += 1
                m = self.criticality.multiplicity(graph, theta)
                if m == 1:
                    hits.append(graph)
                elif m > 1:
                    anomalies.append({"n": n, "graph6": write_graph6(graph), "multiplicity": m})
            scanned[n] = count
            if hits:
                result = NThetaResult(theta, n, hits, scanned, anomalies)
                break
        if result is None:
            logger.warning(
                f"No graph with m({theta}, G) = 1 up to order {n_max}",
                extra={"scanned": scanned},
            )
            result = NThetaResult(theta, None, [], scanned, anomalies)
        else:
            logger.info(
                f"n_theta for {theta} is {result.n_theta}",
                extra={"graphs": len(result.graphs)},
            )
        if source is None:
            self._n_theta[key] = result
        return result


_service: Optional[EnumerationService] = None


def get_enumeration_service() -> EnumerationService:
    global _service
    if _service is None:
        _service = EnumerationService()
    return _service
