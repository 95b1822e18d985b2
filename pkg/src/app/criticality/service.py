from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from app.graphs.graph import Graph
from app.matching.service import MatchingService, get_matching_service
from app.polynomials.algebraic import AlgebraicRoot
from app.polynomials.factorization import irreducible_factors
from app.polynomials.polynomial import IntPolynomial, factor_multiplicity
from exceptions import ArgumentError


class VertexKind(str, Enum):
    ESSENTIAL = "essential"
    NEUTRAL = "neutral"
    POSITIVE = "positive"


@dataclass(frozen=True)
class VertexClass:
    """Behaviour of one vertex; ``delta`` is m(theta, G - u) - m(theta, G)."""

    kind: VertexKind
    special: bool
    delta: int


@dataclass(frozen=True)
class CriticalityVerdict:
    graph: Graph
    theta: AlgebraicRoot
    is_root: bool
    multiplicity: int
    classes: dict[int, VertexClass] = field(default_factory=dict)

    @property
    def critical(self) -> bool:
        return (
            self.is_root
            and len(self.classes) == self.graph.n
            and all(c.kind is VertexKind.ESSENTIAL for c in self.classes.values())
        )

    def vertices_of(self, kind: VertexKind) -> list[int]:
        return [v for v, c in sorted(self.classes.items()) if c.kind is kind]


def _kind(delta: int) -> VertexKind:
    if delta < 0:
        return VertexKind.ESSENTIAL
    if delta == 0:
        return VertexKind.NEUTRAL
    return VertexKind.POSITIVE


class CriticalityService:
    """Root multiplicities and the essential/neutral/positive vertex taxonomy."""

    def __init__(self, engine: Optional[MatchingService] = None) -> None:
        self.engine = engine or get_matching_service()

    def multiplicity_in(self, poly: IntPolynomial, theta: AlgebraicRoot) -> int:
        return factor_multiplicity(poly, theta.minpoly)

    def multiplicity(self, graph: Graph, theta: AlgebraicRoot) -> int:
        return self.multiplicity_in(self.engine.matching_polynomial(graph), theta)

    def deleted_multiplicities(self, graph: Graph, theta: AlgebraicRoot) -> list[int]:
        return [self.multiplicity(graph.delete_vertex(v), theta) for v in range(graph.n)]

    def classify_vertices(self, graph: Graph, theta: AlgebraicRoot) -> CriticalityVerdict:
        base = self.multiplicity(graph, theta)
        if base == 0:
            return CriticalityVerdict(graph=graph, theta=theta, is_root=False, multiplicity=0)
        deltas = [m - base for m in self.deleted_multiplicities(graph, theta)]
        essential = 0
        for v, delta in enumerate(deltas):
            if delta < 0:
                essential |= 1 << v
        classes = {
            v: VertexClass(
                kind=_kind(delta),
                special=delta >= 0 and bool(graph.neighbor_mask(v) & essential),
                delta=delta,
            )
            for v, delta in enumerate(deltas)
        }
        return CriticalityVerdict(
            graph=graph, theta=theta, is_root=True, multiplicity=base, classes=classes
        )

    def is_theta_critical(self, graph: Graph, theta: AlgebraicRoot) -> bool:
        if not graph.is_connected() or graph.n == 0:
            raise ArgumentError("criticality is decided for connected graphs only")
        base = self.multiplicity(graph, theta)
        if base == 0:
            return False
        return all(
            self.multiplicity(graph.delete_vertex(v), theta) < base for v in range(graph.n)
        )

    def essential_exists(self, graph: Graph, theta: AlgebraicRoot) -> Optional[int]:
        """Lowest-index essential vertex; None when no vertex is essential."""
        verdict = self.classify_vertices(graph, theta)
        if not verdict.is_root:
            raise ArgumentError(f"{theta} is not a root of the matching polynomial")
        essential = verdict.vertices_of(VertexKind.ESSENTIAL)
        return essential[0] if essential else None

    # Consistency checks: each returns counterexample records, empty when the statement holds.

    def interlacing_violations(
        self, graph: Graph, theta: Optional[AlgebraicRoot] = None
    ) -> list[dict]:
        """|m(Q, G - u) - m(Q, G)| <= 1 for every u.

        Without theta, Q ranges over the irreducible factors of mu(G) mu(G - u),
        so roots that appear only after the deletion are covered too.
        """
        base = self.engine.matching_polynomial(graph)
        base_factors = [] if theta is not None else [f.poly for f in irreducible_factors(base)]
        records = []
        for u in range(graph.n):
            deleted = self.engine.matching_polynomial(graph.delete_vertex(u))
            if theta is not None:
                candidates = [theta.minpoly]
            else:
                candidates = list(dict.fromkeys(
                    base_factors + [f.poly for f in irreducible_factors(deleted)]
                ))
            for factor in candidates:
                delta = factor_multiplicity(deleted, factor) - factor_multiplicity(base, factor)
                if abs(delta) > 1:
                    records.append({"vertex": u, "factor": factor.to_text(), "delta": delta})
        return records

    def gallai_violations(self, verdict: CriticalityVerdict) -> list[dict]:
        if verdict.critical and verdict.multiplicity != 1:
            return [{"multiplicity": verdict.multiplicity}]
        return []

    def positive_vertex_violations(self, verdict: CriticalityVerdict) -> list[dict]:
        """A connected non-critical graph with theta as a root has a positive vertex."""
        if not verdict.is_root or verdict.critical or not verdict.graph.is_connected():
            return []
        if verdict.vertices_of(VertexKind.POSITIVE):
            return []
        return [{"multiplicity": verdict.multiplicity, "positive": []}]

    def neutral_deletion_violations(self, verdict: CriticalityVerdict) -> list[dict]:
        """Deleting a neutral vertex keeps essentials essential and never creates one."""
        if not verdict.is_root:
            return []
        records = []
        for u in verdict.vertices_of(VertexKind.NEUTRAL):
            reduced = self.classify_vertices(verdict.graph.delete_vertex(u), verdict.theta)
            for v, before in verdict.classes.items():
                if v == u:
                    continue
                index = v if v < u else v - 1
                after = reduced.classes.get(index)
                after_kind = after.kind if after is not None else None
                if before.kind is VertexKind.ESSENTIAL:
                    ok = after_kind is VertexKind.ESSENTIAL
                else:
                    ok = after_kind in (VertexKind.NEUTRAL, VertexKind.POSITIVE)
                if not ok:
                    records.append({
                        "neutral": u,
                        "vertex": v,
                        "before": before.kind.value,
                        "after": after_kind.value if after_kind is not None else None,
                    })
        return records
