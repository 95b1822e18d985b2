from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, combinations_with_replacement, product
from typing import Any, Iterator, Optional

from app.criticality.service import CriticalityService
from app.enumeration.service import EnumerationService, get_enumeration_service
from app.families import constructions as c
from app.graphs.canonical import CanonicalCode, canonical_code
from app.graphs.graph import Graph, iter_bits
from app.graphs.graph6 import parse_graph6
from app.polynomials.algebraic import AlgebraicRoot
from exceptions import ArgumentError, SizeLimitError
from logger import get_logger

logger = get_logger(__name__)

# Upper bound on raw wiring combinations tried by the member generators.
MAX_FAMILY_CANDIDATES = 250_000


class FamilyName(str, Enum):
    PATH = "P"
    CYCLE = "C"
    COMPLETE = "K"
    STAR = "star"
    W = "W"
    W_STAR = "Wstar"
    W_PLUS = "Wplus"
    Y = "Y"
    Y_STAR = "Ystar"
    R = "R"
    R_STAR = "Rstar"
    F = "F"
    F_STAR = "Fstar"
    F_PLUS = "Fplus"
    C_STAR = "Cstar"
    C_HAT = "Chat"
    C_PLUS = "Cplus"
    T = "T"
    HUB = "hub"
    H = "H"
    H1 = "H1"
    H2 = "H2"
    G_STAR = "Gstar"
    Q = "Q"


_FIXED = {FamilyName.H1, FamilyName.H2, FamilyName.G_STAR}


@dataclass(frozen=True)
class FamilySpec:
    name: FamilyName
    n: Optional[int] = None
    params: dict[str, Any] = field(default_factory=dict)

    def describe(self) -> dict:
        return {"name": self.name.value, "n": self.n, "params": self.params}


def _nonempty_subsets(n: int) -> list[list[int]]:
    return [list(iter_bits(mask)) for mask in range(1, 1 << n)]


class FamiliesService:
    """Named constructions, complete member sets and structural recognition."""

    def __init__(
        self,
        criticality: Optional[CriticalityService] = None,
        enumeration: Optional[EnumerationService] = None,
    ) -> None:
        self.criticality = criticality or CriticalityService()
        self.enumeration = enumeration or get_enumeration_service()

    # Construction

    def make_named(self, spec: FamilySpec) -> Graph:
        name = FamilyName(spec.name)
        if name in _FIXED:
            return {
                FamilyName.H1: c.graph_h1,
                FamilyName.H2: c.graph_h2,
                FamilyName.G_STAR: c.graph_g_star,
            }[name]()
        if name is FamilyName.Q:
            theta = self._theta_param(spec.params)
            return self.q_member(theta, int(spec.params.get("k", 2)))
        if name is FamilyName.H:
            return self._h_from_params(spec.params)
        if spec.n is None:
            raise ArgumentError(f"family {name.value} needs an order n")
        n = spec.n
        if name is FamilyName.HUB:
            pattern = spec.params.get("pattern")
            if pattern is None:
                return c.hub_tree(n)
            return c.make_f_family(n, [c.Attachment(a) for a in pattern])
        if name is FamilyName.W_PLUS:
            if n % 3 != 0:
                raise ArgumentError(f"W+_n is built from a 1-critical W_n and needs n = 0 mod 3, got {n}")
            return c.add_critical_edge(c.path_w(n), 1)
        if name is FamilyName.F_PLUS:
            if n % 3 != 1:
                raise ArgumentError(f"F+_n is built from a 1-critical F_n and needs n = 1 mod 3, got {n}")
            return c.add_critical_edge(c.path_f(n), 1)
        if name is FamilyName.CYCLE:
            return Graph.cycle(n)
        if n < 1:
            raise ArgumentError(f"order must be positive, got {n}")
        builders = {
            FamilyName.PATH: Graph.path,
            FamilyName.COMPLETE: Graph.complete,
            FamilyName.STAR: Graph.star,
            FamilyName.W: c.path_w,
            FamilyName.W_STAR: c.path_w_star,
            FamilyName.Y: c.path_y,
            FamilyName.Y_STAR: c.path_y_star,
            FamilyName.R: c.path_r,
            FamilyName.R_STAR: c.path_r_star,
            FamilyName.F: c.path_f,
            FamilyName.F_STAR: c.path_f_star,
            FamilyName.C_STAR: c.cycle_star,
            FamilyName.C_HAT: c.cycle_hat,
            FamilyName.C_PLUS: c.cycle_plus,
            FamilyName.T: c.hub_tree,
        }
        return builders[name](n)

    @staticmethod
    def _theta_param(params: dict) -> AlgebraicRoot:
        text = params.get("theta")
        if not text:
            raise ArgumentError("parameter 'theta' (a minimal polynomial) is required")
        return text if isinstance(text, AlgebraicRoot) else AlgebraicRoot.parse(str(text))

    @staticmethod
    def _h_from_params(params: dict) -> Graph:
        components = [
            g if isinstance(g, Graph) else parse_graph6(g) for g in params.get("components", [])
        ]
        if not components:
            raise ArgumentError("parameter 'components' must list at least one graph")
        t = int(params.get("t", 1))
        wiring = params.get("wiring") or [[[0] for _ in components] for _ in range(t)]
        inner = [tuple(e) for e in params.get("inner_edges", [])]
        return c.make_h_family(components, t, wiring, inner)

    # Complete member sets, keyed by canonical code

    def f_family_members(self, n: int) -> dict[CanonicalCode, Graph]:
        """Every member of the hub family of order n up to isomorphism."""
        pairs = (n - 1) // 2 if n % 2 else (n - 2) // 2
        members: dict[CanonicalCode, Graph] = {}
        for pattern in product(list(c.Attachment), repeat=pairs):
            graph = c.make_f_family(n, pattern)
            members.setdefault(canonical_code(graph), graph)
        return members

    def h_prime(self, theta: AlgebraicRoot) -> tuple[int, list[Graph]]:
        result = self.enumeration.compute_n_theta(theta)
        if not result.found:
            raise ArgumentError(
                f"no graph with m({theta}, G) = 1 up to order {max(result.scanned, default=0)}"
            )
        return result.n_theta, result.graphs

    def h_family_members(self, theta: AlgebraicRoot, n: int, t: int = 1) -> dict[CanonicalCode, Graph]:
        """t hubs over (n - t)/n_theta components from H'_theta; t-connected members only."""
        n_theta, catalogue = self.h_prime(theta)
        if t < 1 or n <= t or (n - t) % n_theta:
            return {}
        s = (n - t) // n_theta
        hub_pairs = list(combinations(range(t), 2))
        members: dict[CanonicalCode, Graph] = {}
        for components in combinations_with_replacement(catalogue, s):
            choices = [_nonempty_subsets(g.n) for g in components]
            total = 1
            for options in choices:
                total *= len(options) ** t
            total *= 2 ** len(hub_pairs)
            if total > MAX_FAMILY_CANDIDATES:
                raise SizeLimitError(
                    f"{total} wirings exceed the generator limit {MAX_FAMILY_CANDIDATES}",
                    MAX_FAMILY_CANDIDATES,
                )
            for flat in product(*(choices * t)):
                wiring = [list(flat[a * s:(a + 1) * s]) for a in range(t)]
                for mask in range(1 << len(hub_pairs)):
                    inner = [hub_pairs[b] for b in range(len(hub_pairs)) if mask >> b & 1]
                    graph = c.make_h_family(list(components), t, wiring, inner)
                    if t > 1 and graph.connectivity() < t:
                        continue
                    members.setdefault(canonical_code(graph), graph)
        logger.debug(
            f"Generated {len(members)} members for theta={theta}, n={n}, t={t}",
            extra={"n_theta": n_theta},
        )
        return members

    # Recognition

    def is_member_hub(self, graph: Graph) -> bool:
        """Hub vertex whose deletion leaves only K_2's (odd n) or one K_1 plus K_2's (even n)."""
        n = graph.n
        if n < 7 or not graph.is_connected():
            return False
        for w in range(n):
            sizes = sorted(
                mask.bit_count() for mask in graph.component_masks(graph.vertex_mask & ~(1 << w))
            )
            expected = [2] * ((n - 1) // 2) if n % 2 else [1] + [2] * ((n - 2) // 2)
            if sizes == expected:
                return True
        return False

    def is_member_h(self, graph: Graph, theta: AlgebraicRoot, t: int = 1) -> bool:
        """t hubs, each adjacent to every component left by their deletion, all components in H'_theta."""
        if not graph.is_connected() or graph.n <= t:
            return False
        n_theta, catalogue = self.h_prime(theta)
        if (graph.n - t) % n_theta:
            return False
        codes = {canonical_code(g) for g in catalogue}
        for hubs in combinations(range(graph.n), t):
            allowed = graph.vertex_mask
            for a in hubs:
                allowed &= ~(1 << a)
            pieces = graph.component_masks(allowed)
            if len(pieces) * n_theta != graph.n - t:
                continue
            if not all(graph.neighbor_mask(a) & piece for a in hubs for piece in pieces):
                continue
            if all(
                canonical_code(graph.induced_subgraph(list(iter_bits(piece)))) in codes
                for piece in pieces
            ):
                return True
        return False

    # Graphs with a positive vertex that is not special

    def q_member(self, theta: AlgebraicRoot, k: int) -> Graph:
        """Member of Q^k_theta built from the first catalogued critical graph of order n_theta.

        The designated vertex v is labelled 1.
        """
        if k < 2:
            raise ArgumentError(f"k must be at least 2, got {k}")
        _, catalogue = self.h_prime(theta)
        base = catalogue[0]
        return c.make_q(base, 0, [base] * k)

    # Edge addition preserving 1-criticality

    def add_critical_edge(self, graph: Graph, u: int) -> Graph:
        if not graph.is_connected() or not self.criticality.is_theta_critical(
            graph, AlgebraicRoot.integer(1)
        ):
            raise ArgumentError("the graph must be 1-critical")
        return c.add_critical_edge(graph, u)

    def edge_addition_candidates(self, graph: Graph) -> Iterator[int]:
        """Vertices meeting the structural preconditions of the edge-addition construction."""
        for u in range(graph.n):
            try:
                c.edge_addition_pair(graph, u)
            except ArgumentError:
                continue
            yield u


def members_sorted(members: dict[CanonicalCode, Graph]) -> list[Graph]:
    return [members[code] for code in sorted(members)]


def spec_from_args(name: str, n: Optional[int], params: Optional[dict] = None) -> FamilySpec:
    try:
        family = FamilyName(name)
    except ValueError:
        known = ", ".join(f.value for f in FamilyName)
        raise ArgumentError(f"unknown family '{name}'; known families: {known}") from None
    return FamilySpec(name=family, n=n, params=params or {})


def graph_from_source(
    families: FamiliesService,
    graph6: Optional[str] = None,
    family: Optional[str] = None,
    n: Optional[int] = None,
    params: Optional[dict] = None,
) -> Graph:
    """A graph given as graph6 text or as a family member, exactly one of the two."""
    if (graph6 is None) == (family is None):
        raise ArgumentError("give exactly one of a graph6 string and a family name")
    if graph6 is not None:
        return parse_graph6(graph6)
    return families.make_named(spec_from_args(family, n, params))
