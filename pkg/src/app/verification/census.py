"""Census plumbing shared by every claim: graph streams, findings and reports."""

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Iterable, Iterator, Optional

from app.criticality.service import CriticalityService
from app.enumeration.generators import enum_connected, enum_trees
from app.enumeration.service import EnumerationService
from app.families.service import FamiliesService
from app.graphs.canonical import canonical_graph6
from app.graphs.graph import Graph
from app.graphs.graph6 import parse_graph6, write_graph6
from app.matching.service import MatchingService, get_matching_service
from app.polynomials.algebraic import AlgebraicRoot
from app.verification.registry import CensusReport
from logger import get_logger
from metrics.computation import CENSUS_GRAPHS

logger = get_logger(__name__)

# (kind, data) with kind one of "witness", "violation", "mark"
Finding = tuple[str, dict]
Inspector = Callable[[Graph, dict], list[Finding]]

_BATCH = 512


def _record_key(record: dict) -> str:
    return json.dumps(record, sort_keys=True, default=str)


@dataclass
class Toolkit:
    engine: MatchingService
    criticality: CriticalityService
    enumeration: EnumerationService
    families: FamiliesService


_toolkit: Optional[Toolkit] = None


def toolkit() -> Toolkit:
    """Services shared by the claims of this process."""
    global _toolkit
    if _toolkit is None:
        engine = get_matching_service()
        criticality = CriticalityService(engine)
        enumeration = EnumerationService(criticality)
        _toolkit = Toolkit(
            engine=engine,
            criticality=criticality,
            enumeration=enumeration,
            families=FamiliesService(criticality, enumeration),
        )
    return _toolkit


@lru_cache(maxsize=64)
def theta_from_text(text: str) -> AlgebraicRoot:
    return AlgebraicRoot.parse(text)


def _inspect_job(job: tuple[Inspector, str, dict]) -> list[Finding]:
    inspect, text, params = job
    return inspect(parse_graph6(text), params)


class Census:
    """Collects witnesses and violations for one claim run."""

    def __init__(
        self,
        claim: str,
        params: dict[str, Any],
        source: Optional[Iterable[Graph]] = None,
        jobs: int = 1,
    ) -> None:
        self.claim = claim
        self.params = params
        self.source = source
        self.jobs = max(1, jobs)
        self.tools = toolkit()
        self.report = CensusReport(claim=claim, params=dict(params))
        self._started = time.perf_counter()

    # Streams

    def graphs(self, n: int, kind: str = "connected") -> Iterator[Graph]:
        """Census stream of order n: the external source when given, else native generation."""
        if self.source is None:
            yield from enum_trees(n) if kind == "trees" else enum_connected(n)
            return
        for graph in self.source:
            if graph.n != n or not graph.is_connected():
                continue
            if kind == "trees" and not graph.is_tree():
                continue
            yield graph

    def graphs_up_to(self, n_max: int, kind: str = "connected") -> Iterator[Graph]:
        """Orders 1..n_max in one pass, so an external source is read once."""
        if self.source is None:
            for n in range(1, n_max + 1):
                yield from self.graphs(n, kind)
            return
        for graph in self.source:
            if not 1 <= graph.n <= n_max or not graph.is_connected():
                continue
            if kind == "trees" and not graph.is_tree():
                continue
            yield graph

    # Findings

    def _record(self, graph: Optional[Graph], data: dict) -> dict:
        if graph is None:
            return dict(data)
        return {"graph6": write_graph6(graph), "canonical": canonical_graph6(graph), **data}

    def witness(self, graph: Optional[Graph] = None, **data: Any) -> None:
        self.report.witnesses.append(self._record(graph, data))

    def violation(self, graph: Optional[Graph] = None, **data: Any) -> None:
        record = self._record(graph, data)
        self.report.violations.append(record)
        logger.error(f"Counterexample for {self.claim}", extra=record)

    def count(self, scanned: int = 1) -> None:
        self.report.scanned += scanned

    def scan(self, graphs: Iterable[Graph], inspect: Inspector, **extra: Any) -> list[dict]:
        """Run inspect on every graph; returns the marks, records the rest."""
        params = {**self.params, **extra}
        marks: list[dict] = []
        for graph, findings in self._evaluate(graphs, inspect, params):
            self.count()
            for kind, data in findings:
                if kind == "mark":
                    marks.append(self._record(graph, data))
                elif kind == "witness":
                    self.witness(graph, **data)
                else:
                    self.violation(graph, **data)
        return marks

    def _evaluate(
        self, graphs: Iterable[Graph], inspect: Inspector, params: dict
    ) -> Iterator[tuple[Graph, list[Finding]]]:
        if self.jobs == 1:
            for graph in graphs:
                yield graph, inspect(graph, params)
            return
        with ProcessPoolExecutor(max_workers=self.jobs) as pool:
            batch: list[Graph] = []
            for graph in graphs:
                batch.append(graph)
                if len(batch) >= _BATCH:
                    yield from self._evaluate_batch(pool, batch, inspect, params)
                    batch = []
            if batch:
                yield from self._evaluate_batch(pool, batch, inspect, params)

    @staticmethod
    def _evaluate_batch(
        pool: ProcessPoolExecutor, batch: list[Graph], inspect: Inspector, params: dict
    ) -> Iterator[tuple[Graph, list[Finding]]]:
        jobs = [(inspect, write_graph6(g), params) for g in batch]
        yield from zip(batch, pool.map(_inspect_job, jobs, chunksize=16))

    # Report

    def finish(self) -> CensusReport:
        self.report.witnesses.sort(key=_record_key)
        self.report.violations.sort(key=_record_key)
        self.report.elapsed_ms = int((time.perf_counter() - self._started) * 1000)
        CENSUS_GRAPHS.labels(claim=self.claim).inc(self.report.scanned)
        logger.info(
            f"Claim {self.claim} finished: {'pass' if self.report.passed else 'FAIL'}",
            extra={
                "scanned": self.report.scanned,
                "witnesses": len(self.report.witnesses),
                "violations": len(self.report.violations),
                "elapsed_ms": self.report.elapsed_ms,
            },
        )
        return self.report


def compare_sets(census: Census, found: dict[str, dict], expected: dict[str, Graph], label: str) -> None:
    """Report graphs present on only one side of an equality-set comparison (keys: canonical graph6)."""
    for key in sorted(set(found) - set(expected)):
        census.violation(None, reason=f"attains equality but is not in {label}", canonical=key)
    for key in sorted(set(expected) - set(found)):
        census.violation(None, reason=f"member of {label} does not attain equality", canonical=key)


def by_canonical(graphs: Iterable[Graph]) -> dict[str, Graph]:
    return {canonical_graph6(g): g for g in graphs}


def marks_by_canonical(marks: list[dict]) -> dict[str, dict]:
    return {mark["canonical"]: mark for mark in marks}
