"""Multiplicity bounds: exhaustive checks of the upper bounds and their equality sets."""

from app.families import constructions
from app.graphs.graph import Graph
from app.polynomials.factorization import squarefree_decomposition
from app.polynomials.polynomial import IntPolynomial
from app.verification.census import (
    Census,
    Finding,
    by_canonical,
    compare_sets,
    marks_by_canonical,
    theta_from_text,
    toolkit,
)
from app.verification.registry import claim
from exceptions import ArgumentError

_UNIT_PAIR = IntPolynomial((-1, 0, 1))


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ArgumentError(message)


def _n_theta(census: Census) -> int:
    theta = theta_from_text(census.params["theta"])
    n_theta, _ = census.tools.families.h_prime(theta)
    census.report.params["n_theta"] = n_theta
    return n_theta


# Nonzero roots of arbitrary connected graphs


def _max_multiplicity(graph: Graph, params: dict) -> list[Finding]:
    bound = (graph.n - 3) // 2
    k, factor = toolkit().engine.max_nonzero_root_multiplicity(graph)
    if k > bound:
        return [("violation", {"multiplicity": k, "bound": bound, "factor": factor.to_text()})]
    if k < bound:
        return []
    findings: list[Finding] = [("mark", {"multiplicity": k, "factor": factor.to_text()})]
    if factor != _UNIT_PAIR:
        findings.append(("violation", {"reason": "equality carried by a root other than 1, -1",
                                       "factor": factor.to_text()}))
    return findings


@claim(
    "max-multiplicity",
    "Connected graphs of order n >= 7: every nonzero root has multiplicity at most "
    "floor((n-3)/2), with equality exactly for theta = 1, -1 on the hub family",
    n=7,
)
def check_max_multiplicity(census: Census) -> None:
    n = int(census.params["n"])
    _require(n >= 7, f"the bound is stated for n >= 7, got {n}")
    marks = census.scan(census.graphs(n), _max_multiplicity)
    for mark in marks:
        census.witness(None, **mark)
    expected = by_canonical(census.tools.families.f_family_members(n).values())
    compare_sets(census, marks_by_canonical(marks), expected, "the hub family")


def _tree_bound(graph: Graph, params: dict) -> list[Finding]:
    bound = (graph.n - 3) // 2
    k, factor = toolkit().engine.max_nonzero_root_multiplicity(graph)
    if k > bound:
        return [("violation", {"multiplicity": k, "bound": bound})]
    if k == bound:
        return [("mark", {"multiplicity": k, "factor": factor.to_text()})]
    return []


@claim(
    "tree-bound",
    "Trees of order n >= 7: every nonzero root has multiplicity at most floor((n-3)/2), "
    "with equality only for the hub tree T_n",
    n=9,
)
def check_tree_bound(census: Census) -> None:
    n = int(census.params["n"])
    _require(n >= 7, f"the tree bound is checked for n >= 7, got {n}")
    marks = census.scan(census.graphs(n, "trees"), _tree_bound)
    for mark in marks:
        census.witness(None, **mark)
        if mark["factor"] != _UNIT_PAIR.to_text():
            census.violation(None, reason="equality carried by a root other than 1, -1", **mark)
    hub = constructions.hub_tree(n)
    compare_sets(census, marks_by_canonical(marks), by_canonical([hub]), "{T_n}")


def _no_two_connected(graph: Graph, params: dict) -> list[Finding]:
    target = params["target"]
    stripped = toolkit().engine.matching_polynomial(graph).strip_x()
    if stripped.is_constant():
        return []
    factors = [f.to_text() for f, k in squarefree_decomposition(stripped) if k == target]
    if factors and graph.connectivity() >= 2:
        return [("violation", {"multiplicity": target, "factors": factors})]
    return []


@claim(
    "no-two-connected",
    "For n >= 8 no 2-connected graph has a nonzero root of multiplicity (n-5)/2",
    n=9,
)
def check_no_two_connected(census: Census) -> None:
    n = int(census.params["n"])
    _require(n >= 8, f"the statement needs n >= 8, got {n}")
    if (n - 5) % 2:
        census.report.params["vacuous"] = True
        return
    census.scan(census.graphs(n), _no_two_connected, target=(n - 5) // 2)


# Bounds relative to a fixed theta


def _essential_bound(graph: Graph, params: dict) -> list[Finding]:
    theta = theta_from_text(params["theta"])
    criticality = toolkit().criticality
    m = criticality.multiplicity(graph, theta)
    if m == 0 or criticality.is_theta_critical(graph, theta):
        return []
    t = params["t"]
    if t > 1 and graph.connectivity() < t:
        return []
    scaled = m * params["n_theta"]
    limit = graph.n - (params["n_theta"] + 1) * t
    if scaled > limit:
        return [("violation", {"multiplicity": m, "bound": limit / params["n_theta"]})]
    if scaled == limit:
        return [("mark", {"multiplicity": m})]
    return []


def _run_essential_bound(census: Census, t: int) -> None:
    n = int(census.params["n"])
    theta = theta_from_text(census.params["theta"])
    n_theta = _n_theta(census)
    congruent = (n - t) % n_theta == 0
    census.report.params["congruent"] = congruent
    marks = census.scan(census.graphs(n), _essential_bound, n_theta=n_theta, t=t)
    for mark in marks:
        census.witness(None, **mark)
    expected = census.tools.families.h_family_members(theta, n, t) if congruent else {}
    compare_sets(
        census, marks_by_canonical(marks), by_canonical(expected.values()), f"H^(n,{t})_theta"
    )


@claim(
    "essential-bound",
    "Connected graphs that are not theta-critical have m(theta, G) <= (n - n_theta - 1)/n_theta; "
    "equality exactly on H^n_theta",
    theta="x-1",
    n=7,
)
def check_essential_bound(census: Census) -> None:
    _run_essential_bound(census, 1)


@claim(
    "connected-bound",
    "t-connected graphs that are not theta-critical have "
    "m(theta, G) <= (n - (n_theta + 1) t)/n_theta; equality exactly on H^(n,t)_theta",
    theta="x-1",
    n=8,
    t=2,
)
def check_connected_bound(census: Census) -> None:
    t = int(census.params["t"])
    _require(t >= 1, f"t must be at least 1, got {t}")
    _run_essential_bound(census, t)


def _order_bound(graph: Graph, params: dict) -> list[Finding]:
    theta = theta_from_text(params["theta"])
    criticality = toolkit().criticality
    m = criticality.multiplicity(graph, theta)
    if m == 0 or (m == 1 and criticality.is_theta_critical(graph, theta)):
        return []
    required = (m + 1) * params["n_theta"] + 1
    if graph.n < required:
        return [("violation", {"multiplicity": m, "required_order": required})]
    return []


@claim(
    "order-bound",
    "A connected graph with m(theta, G) = k >= 2 (or k = 1 and not critical) "
    "has at least (k + 1) n_theta + 1 vertices",
    theta="x-1",
    n=8,
)
def check_order_bound(census: Census) -> None:
    n_max = int(census.params["n"])
    n_theta = _n_theta(census)
    census.scan(census.graphs_up_to(n_max), _order_bound, n_theta=n_theta)


def _critical_window(graph: Graph, params: dict) -> list[Finding]:
    theta = theta_from_text(params["theta"])
    criticality = toolkit().criticality
    m = criticality.multiplicity(graph, theta)
    if m == 0:
        return []
    if criticality.is_theta_critical(graph, theta):
        return [("witness", {"multiplicity": m})]
    return [("violation", {"multiplicity": m, "reason": "theta is a root but G is not critical"})]


@claim(
    "critical-window",
    "A connected graph with n_theta <= n <= 2 n_theta and theta as a root is theta-critical",
    theta="x-1",
    n=2,
)
def check_critical_window(census: Census) -> None:
    n = int(census.params["n"])
    n_theta = _n_theta(census)
    _require(n_theta <= n <= 2 * n_theta, f"n = {n} lies outside [{n_theta}, {2 * n_theta}]")
    census.scan(census.graphs(n), _critical_window)
