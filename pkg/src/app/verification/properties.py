"""Structural properties checked on every connected graph up to a given order.

Claims that depend on theta take ``theta="all"`` by default, meaning every
irreducible factor of mu(G) in turn. Factors of the form h(x^2) whose
splitting was not certified are still used: both halves of a split share
one multiplicity by sign symmetry.
"""

import random
from fractions import Fraction

from app.graphs.graph import Graph
from app.matching.oracle import matching_counts_oracle, polynomial_from_counts
from app.matching.path_tree import verify_path_tree_divisibility
from app.polynomials.algebraic import AlgebraicRoot
from app.polynomials.factorization import irreducible_factors, squarefree_part
from app.polynomials.polynomial import IntPolynomial, gcd
from app.polynomials.sturm import (
    count_real_roots,
    count_real_roots_with_multiplicity,
    largest_root_interval,
    largest_root_multiplicity,
    shrink_root_interval,
)
from app.verification.census import Census, Finding, theta_from_text, toolkit
from app.verification.registry import claim
from exceptions import SizeLimitError

# Small partners for the union identity
_PARTNERS = {
    "K1": Graph(1),
    "K2": Graph.path(2),
    "P3": Graph.path(3),
    "K3": Graph.complete(3),
}


def _thetas(graph: Graph, params: dict) -> list[AlgebraicRoot]:
    text = params.get("theta") or "all"
    if text != "all":
        return [theta_from_text(text)]
    poly = toolkit().engine.matching_polynomial(graph)
    return [
        AlgebraicRoot(minpoly=factor.poly, irreducibility_verified=factor.verified)
        for factor in irreducible_factors(poly)
    ]


def _scan_orders(census: Census, inspect) -> None:
    census.scan(census.graphs_up_to(int(census.params["n"])), inspect)


# Engine cross-checks


def _engine_oracle(graph: Graph, params: dict) -> list[Finding]:
    engine = toolkit().engine
    edge_rule = engine.matching_polynomial(graph)
    oracle = polynomial_from_counts(graph.n, matching_counts_oracle(graph))
    vertex_rule = engine.vertex_rule_polynomial(graph)
    if edge_rule == oracle == vertex_rule:
        return []
    return [("violation", {
        "engine": edge_rule.to_text(),
        "oracle": oracle.to_text(),
        "vertex_rule": vertex_rule.to_text(),
    })]


def _random_graphs(samples: int, order: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    graphs = []
    for _ in range(samples):
        n = rng.randint(1, order)
        density = rng.uniform(0.2, 0.7)
        edges = [(i, j) for j in range(n) for i in range(j) if rng.random() < density]
        graphs.append(Graph.from_edges(n, edges))
    return graphs


@claim(
    "engine-oracle",
    "The edge-rule engine, the vertex rule and brute-force matching counts agree",
    n=7,
    samples=50,
    random_order=12,
    seed=0,
)
def check_engine_oracle(census: Census) -> None:
    _scan_orders(census, _engine_oracle)
    samples = int(census.params["samples"])
    if samples:
        graphs = _random_graphs(samples, int(census.params["random_order"]), int(census.params["seed"]))
        # random samples may be disconnected, so they bypass the connected-only streams
        census.scan(graphs, _engine_oracle)


def _sign_symmetry(graph: Graph, params: dict) -> list[Finding]:
    poly = toolkit().engine.matching_polynomial(graph)
    expected = poly if graph.n % 2 == 0 else -poly
    if poly.reflect() != expected:
        return [("violation", {"mu": poly.to_text()})]
    return []


@claim("sign-symmetry", "mu(G, -x) = (-1)^n mu(G, x)", n=7)
def check_sign_symmetry(census: Census) -> None:
    _scan_orders(census, _sign_symmetry)


def _multiplicativity(graph: Graph, params: dict) -> list[Finding]:
    engine = toolkit().engine
    findings: list[Finding] = []
    for name, partner in _PARTNERS.items():
        union = Graph.disjoint_union(graph, partner)
        product = engine.matching_polynomial(graph) * engine.matching_polynomial(partner)
        if engine.vertex_rule_polynomial(union) != product:
            findings.append(("violation", {"partner": name}))
    return findings


@claim("multiplicativity", "mu(G u H) = mu(G) mu(H) for small partners H", n=7)
def check_multiplicativity(census: Census) -> None:
    _scan_orders(census, _multiplicativity)


# Roots


def _real_roots(graph: Graph, params: dict) -> list[Finding]:
    poly = toolkit().engine.matching_polynomial(graph)
    real = count_real_roots_with_multiplicity(poly)
    if real != graph.n:
        return [("violation", {"mu": poly.to_text(), "real_roots": real})]
    return []


@claim("real-roots", "mu(G) has only real roots (counted with multiplicity)", n=7)
def check_real_roots(census: Census) -> None:
    _scan_orders(census, _real_roots)


def _stays_below(core: IntPolynomial, other: IntPolynomial, interval: tuple[Fraction, Fraction]) -> bool:
    """Whether every root of other lies strictly below the root of core isolated by interval."""
    low, high = interval
    if count_real_roots(other, (high, None)):
        return False
    common = gcd(core, other)
    if not common.is_constant() and count_real_roots(common, (low, high)):
        return False
    while count_real_roots(other, (low, high)):
        low, high = shrink_root_interval(core, (low, high))
        if count_real_roots(other, (high, None)):
            return False
    return True


def _largest_root(graph: Graph, params: dict) -> list[Finding]:
    engine = toolkit().engine
    poly = engine.matching_polynomial(graph)
    if largest_root_multiplicity(poly) != 1:
        return [("violation", {"reason": "largest root is not simple", "mu": poly.to_text()})]
    interval = largest_root_interval(poly)
    core = squarefree_part(poly)
    findings: list[Finding] = []
    for u in range(graph.n):
        deleted = engine.matching_polynomial(graph.delete_vertex(u))
        if deleted.is_constant():
            continue
        if not _stays_below(core, deleted, interval):
            findings.append(("violation", {"reason": "largest root not strictly decreased", "vertex": u}))
    return findings


@claim(
    "largest-root",
    "The largest root of mu(G) is simple and strictly exceeds that of every mu(G - u)",
    n=7,
)
def check_largest_root(census: Census) -> None:
    _scan_orders(census, _largest_root)


# Vertex taxonomy


def _interlacing(graph: Graph, params: dict) -> list[Finding]:
    text = params.get("theta") or "all"
    theta = None if text == "all" else theta_from_text(text)
    records = toolkit().criticality.interlacing_violations(graph, theta)
    return [("violation", record) for record in records]


@claim(
    "interlacing",
    "Deleting a vertex changes the multiplicity of any root by at most one",
    theta="all",
    n=7,
)
def check_interlacing(census: Census) -> None:
    _scan_orders(census, _interlacing)


def _gallai(graph: Graph, params: dict) -> list[Finding]:
    criticality = toolkit().criticality
    findings: list[Finding] = []
    for theta in _thetas(graph, params):
        verdict = criticality.classify_vertices(graph, theta)
        for record in criticality.gallai_violations(verdict):
            findings.append(("violation", {"theta": theta.to_text(), **record}))
    return findings


@claim(
    "gallai",
    "A connected graph whose vertices are all theta-essential has m(theta, G) = 1",
    theta="all",
    n=7,
)
def check_gallai(census: Census) -> None:
    _scan_orders(census, _gallai)


def _positive_exists(graph: Graph, params: dict) -> list[Finding]:
    criticality = toolkit().criticality
    findings: list[Finding] = []
    for theta in _thetas(graph, params):
        verdict = criticality.classify_vertices(graph, theta)
        for record in criticality.positive_vertex_violations(verdict):
            findings.append(("violation", {"theta": theta.to_text(), **record}))
    return findings


@claim(
    "positive-exists",
    "A connected graph that has theta as a root but is not theta-critical has a positive vertex",
    theta="all",
    n=7,
)
def check_positive_exists(census: Census) -> None:
    _scan_orders(census, _positive_exists)


def _neutral_deletion(graph: Graph, params: dict) -> list[Finding]:
    criticality = toolkit().criticality
    findings: list[Finding] = []
    for theta in _thetas(graph, params):
        verdict = criticality.classify_vertices(graph, theta)
        for record in criticality.neutral_deletion_violations(verdict):
            findings.append(("violation", {"theta": theta.to_text(), **record}))
    return findings


@claim(
    "neutral-deletion",
    "Deleting a neutral vertex keeps essential vertices essential and creates no new ones",
    theta="all",
    n=7,
)
def check_neutral_deletion(census: Census) -> None:
    _scan_orders(census, _neutral_deletion)


def _essential_exists(graph: Graph, params: dict) -> list[Finding]:
    criticality = toolkit().criticality
    findings: list[Finding] = []
    for theta in _thetas(graph, params):
        if criticality.multiplicity(graph, theta) == 0:
            continue
        if criticality.essential_exists(graph, theta) is None:
            findings.append(("violation", {"theta": theta.to_text()}))
    return findings


@claim("essential-exists", "Every root of mu(G) has an essential vertex", theta="all", n=7)
def check_essential_exists(census: Census) -> None:
    _scan_orders(census, _essential_exists)


# Path trees


def _path_tree(graph: Graph, params: dict) -> list[Finding]:
    engine = toolkit().engine
    findings: list[Finding] = []
    for u in range(graph.n):
        try:
            check = verify_path_tree_divisibility(graph, u, engine)
        except SizeLimitError as error:
            findings.append(("violation", {"vertex": u, "reason": str(error)}))
            continue
        if not (check.divisible and check.quotient_identity):
            findings.append(("violation", {
                "vertex": u,
                "divisible": check.divisible,
                "quotient_identity": check.quotient_identity,
            }))
    return findings


@claim(
    "path-tree",
    "mu(G) divides mu(T(G, u)) and mu(G - u)/mu(G) = mu(T - u)/mu(T) for every u",
    n=6,
)
def check_path_tree(census: Census) -> None:
    _scan_orders(census, _path_tree)
