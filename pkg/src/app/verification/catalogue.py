"""Claims about the named families, the criticality censuses and the generators."""

from itertools import product
from typing import Callable, Optional

from app.criticality.service import VertexKind
from app.enumeration.generators import brute_force_classes, brute_force_tree_classes
from app.families import constructions as c
from app.graphs.canonical import canonical_code
from app.graphs.graph import Graph
from app.graphs.graph6 import write_graph6
from app.polynomials.algebraic import AlgebraicRoot
from app.polynomials.polynomial import X, IntPolynomial
from app.verification.census import Census, theta_from_text
from app.verification.registry import claim
from exceptions import ArgumentError

ONE_ROOT = AlgebraicRoot.integer(1)

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}
# theta-critical counts of whole generated classes, keyed by (minimal polynomial, n, kind)
CRITICAL_COUNTS = {
    ("x-1", 7, "connected"): 16,
    ("x-1", 7, "trees"): 0,
}

_Y4 = IntPolynomial((0, 0, -3, 0, 1))
_UNIT_PAIR = IntPolynomial((-1, 0, 1))


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


# Values at x = 1


def y_at_one(n: int) -> int:
    if n % 3 == 1:
        return 2 * _sign((n - 1) // 3)
    return _sign(n // 3)


def w_at_one(n: int) -> int:
    if n % 3 == 0:
        return 0
    if n % 3 == 1:
        return 3 * _sign((n - 1) // 3)
    return 3 * _sign((n - 2) // 3)


def w_star_at_one(m: int) -> Optional[int]:
    """Only the m = 1 mod 3 case has a closed form."""
    return _sign((m - 1) // 3) if m % 3 == 1 else None


def r_at_one(n: int) -> int:
    if n % 3 == 2:
        return 2 * _sign((n - 2) // 3)
    return _sign(-(-n // 3) + 1)


def r_star_at_one(n: int) -> int:
    if n % 3 == 0:
        return 2 * _sign((n - 3) // 3)
    if n % 3 == 1:
        return _sign((n - 1) // 3)
    return 3 * _sign((n - 2) // 3)


def y_star_at_one(n: int) -> int:
    if n % 3 == 0:
        return _sign((n - 3) // 3)
    if n % 3 == 1:
        return 2 * _sign((n - 1) // 3)
    return 3 * _sign((n - 2) // 3)


def hub_family_form(t: int, s: int) -> IntPolynomial:
    """(x^2 - 1)^(t-1) (x^4 - (s+1) x^2 + 1) for even n = 2t + 2 and hub degree s."""
    return _UNIT_PAIR ** (t - 1) * IntPolynomial((1, 0, -(s + 1), 0, 1))


@claim(
    "closed-forms",
    "Closed forms for mu(., 1) on the path-like families and the recurrences linking them",
    n_max=30,
)
def check_closed_forms(census: Census) -> None:
    n_max = int(census.params["n_max"])
    mu = census.tools.engine.matching_polynomial

    def expect(family: str, n: int, expected, actual) -> None:
        census.count()
        if expected != actual:
            census.violation(None, family=family, n=n, expected=str(expected), actual=str(actual))

    values: list[tuple[str, int, Callable[[int], Graph], Callable[[int], Optional[int]]]] = [
        ("Y", 3, c.path_y, y_at_one),
        ("W", 6, c.path_w, w_at_one),
        ("Wstar", 7, c.path_w_star, w_star_at_one),
        ("R", 7, c.path_r, r_at_one),
        ("Rstar", 8, c.path_r_star, r_star_at_one),
        ("Ystar", 4, c.path_y_star, y_star_at_one),
    ]
    for family, start, build, value in values:
        for n in range(start, n_max + 1):
            expected = value(n)
            if expected is not None:
                expect(family, n, expected, mu(build(n)).evaluate(1))

    expect("Y", 4, _Y4, mu(c.path_y(4)))
    for n in range(6, n_max + 1):
        expect("Y recurrence", n, -mu(c.path_y(n - 3)).evaluate(1), mu(c.path_y(n)).evaluate(1))
    for n in range(7, n_max + 1):
        expect("W identity", n, X * mu(c.path_y(n - 1)) - X * mu(c.path_y(n - 3)), mu(c.path_w(n)))
    for n in range(9, n_max + 1):
        expect("R recurrence", n, X * mu(c.path_r(n - 1)) - mu(c.path_r(n - 2)), mu(c.path_r(n)))
    for n in range(10, n_max + 1):
        expect(
            "Rstar recurrence", n,
            X * mu(c.path_r_star(n - 1)) - mu(c.path_r_star(n - 2)), mu(c.path_r_star(n)),
        )
        expect("F identity", n, X * mu(c.path_r(n - 1)) - X * mu(c.path_r(n - 3)), mu(c.path_f(n)))
    for n in range(13, n_max + 1):
        expect(
            "Fstar identity", n,
            _Y4 * mu(c.path_r_star(n - 4)) - X ** 3 * mu(c.path_r_star(n - 5)), mu(c.path_f_star(n)),
        )

    for n in (8, 10, 12):
        t = (n - 2) // 2
        for pattern in product(list(c.Attachment), repeat=t):
            s = 1 + sum(2 if a is c.Attachment.BOTH else 1 for a in pattern)
            expect(f"hub form s={s}", n, hub_family_form(t, s), mu(c.make_f_family(n, pattern)))


def _critical_family_members(n: int) -> list[tuple[str, Graph]]:
    members: list[tuple[str, Graph]] = []
    if n % 3 == 0 and n >= 6:
        w = c.path_w(n)
        members += [("W", w), ("Wplus", c.add_critical_edge(w, 1)), ("Cstar", c.cycle_star(n))]
    if n % 3 == 1 and n >= 10:
        f = c.path_f(n)
        members += [("F", f), ("Fplus", c.add_critical_edge(f, 1)), ("Chat", c.cycle_hat(n))]
    if n % 3 == 2:
        if n >= 11:
            members.append(("Fstar", c.path_f_star(n)))
        if n >= 5:
            members.append(("Cplus", c.cycle_plus(n)))
    return members


@claim(
    "critical-families",
    "The listed trees and unicyclic graphs are 1-critical; 1-critical trees exist for n >= 9 "
    "and 1-critical non-trees for n >= 5",
    n_max=23,
)
def check_critical_families(census: Census) -> None:
    n_max = int(census.params["n_max"])
    criticality = census.tools.criticality
    for n in range(5, n_max + 1):
        has_tree = has_other = False
        for name, graph in _critical_family_members(n):
            census.count()
            if not criticality.is_theta_critical(graph, ONE_ROOT):
                census.violation(graph, family=name, n=n, reason="not 1-critical")
                continue
            census.witness(graph, family=name, n=n)
            has_tree |= graph.is_tree()
            has_other |= not graph.is_tree()
        if n == 7:
            census7 = census.tools.enumeration.filter_critical(census.graphs(7), ONE_ROOT)
            for graph in census7:
                if not graph.is_tree():
                    has_other = True
                    census.witness(graph, family="census", n=7)
        if n >= 9 and not has_tree:
            census.violation(None, n=n, reason="no 1-critical tree constructed")
        if not has_other:
            census.violation(None, n=n, reason="no 1-critical non-tree found")


@claim(
    "critical-census",
    "All theta-critical connected graphs of order n (or trees with kind=trees), checked against known counts",
    theta="x-1",
    n=7,
    kind="connected",
    expected=None,
)
def check_critical_census(census: Census) -> None:
    n = int(census.params["n"])
    kind = census.params["kind"]
    if kind not in ("connected", "trees"):
        raise ArgumentError(f"kind must be 'connected' or 'trees', got {kind!r}")
    theta = theta_from_text(census.params["theta"])
    scanned = 0

    def counted(graphs):
        nonlocal scanned
        for graph in graphs:
            scanned += 1
            yield graph

    found = list(
        census.tools.enumeration.filter_critical(counted(census.graphs(n, kind)), theta, census.jobs)
    )
    census.count(scanned)
    for graph in found:
        census.witness(graph)
    expected = census.params.get("expected")
    if expected is None and census.source is None:
        expected = CRITICAL_COUNTS.get((theta.minpoly.to_text(), n, kind))
        census.report.params["expected"] = expected
    if expected is not None and len(found) != int(expected):
        census.violation(None, reason="critical count differs", expected=int(expected), found=len(found))


@claim(
    "positive-not-special",
    "Members of Q^k_theta have m(theta, G) = k - 1 and a positive vertex that is not special",
    theta="x^2-3",
    k=2,
)
def check_positive_not_special(census: Census) -> None:
    theta = theta_from_text(census.params["theta"])
    k = int(census.params["k"])
    families = census.tools.families
    n_theta, _ = families.h_prime(theta)
    graph = families.q_member(theta, k)
    verdict = census.tools.criticality.classify_vertices(graph, theta)
    census.count()
    v = verdict.classes.get(1)
    problems = []
    if graph.n != (k + 1) * n_theta + 2:
        problems.append(f"order {graph.n} differs from (k+1) n_theta + 2")
    if verdict.multiplicity != k - 1:
        problems.append(f"multiplicity {verdict.multiplicity} differs from k - 1")
    if v is None or v.kind is not VertexKind.POSITIVE or v.special:
        problems.append("vertex v is not positive and non-special")
    for problem in problems:
        census.violation(graph, reason=problem)
    if not problems:
        census.witness(graph, multiplicity=verdict.multiplicity, vertex=1)

    if theta.minpoly == IntPolynomial((-3, 0, 1)):
        census.count()
        g_star = c.graph_g_star()
        classes = census.tools.criticality.classify_vertices(g_star, theta).classes
        expected = {
            "u": (VertexKind.POSITIVE, True),
            "v1": (VertexKind.POSITIVE, False),
            "w1": (VertexKind.NEUTRAL, None),
            "z1": (VertexKind.ESSENTIAL, None),
        }
        for label, (kind, special) in expected.items():
            found = classes.get(c.G_STAR_LABELS[label])
            if found is None or found.kind is not kind or (special is not None and found.special != special):
                census.violation(g_star, vertex=label, expected=kind.value,
                                 found=found.kind.value if found else None)
        census.witness(g_star, family="Gstar")


@claim(
    "edge-addition",
    "Adding the edge u1u2 at a degree-three cut vertex with a pendant neighbour keeps 1-criticality",
    n_max=16,
)
def check_edge_addition(census: Census) -> None:
    n_max = int(census.params["n_max"])
    criticality = census.tools.criticality
    families = census.tools.families
    sources = [c.path_w(n) for n in range(6, n_max + 1, 3)]
    sources += [c.path_f(n) for n in range(10, n_max + 1, 3)]
    if n_max >= 7:
        sources += list(census.tools.enumeration.filter_critical(census.graphs(7), ONE_ROOT))
    for graph in sources:
        for u in families.edge_addition_candidates(graph):
            census.count()
            extended = c.add_critical_edge(graph, u)
            if criticality.is_theta_critical(extended, ONE_ROOT):
                census.witness(extended, source=write_graph6(graph), vertex=u)
            else:
                census.violation(extended, source=write_graph6(graph), vertex=u)


@claim(
    "edge-deletion",
    "Deleting any edge of a graph in H'_theta leaves no connected graph with m(theta, .) = 1",
    theta="x-1",
)
def check_edge_deletion(census: Census) -> None:
    theta = theta_from_text(census.params["theta"])
    criticality = census.tools.criticality
    _, catalogue = census.tools.families.h_prime(theta)
    for graph in catalogue:
        for u, v in graph.edges():
            census.count()
            reduced = graph.delete_edge(u, v)
            if reduced.is_connected() and criticality.multiplicity(reduced, theta) == 1:
                census.violation(graph, edge=[u, v])


@claim(
    "vertex-extension",
    "Adding one vertex to a graph in H'_theta never gives a theta-critical graph",
    theta="x-1",
)
def check_vertex_extension(census: Census) -> None:
    theta = theta_from_text(census.params["theta"])
    criticality = census.tools.criticality
    _, catalogue = census.tools.families.h_prime(theta)
    for graph in catalogue:
        seen = set()
        for mask in range(1, 1 << graph.n):
            extended = graph.add_vertex(mask)
            code = canonical_code(extended)
            if code in seen:
                continue
            seen.add(code)
            census.count()
            if criticality.is_theta_critical(extended, theta):
                census.violation(extended, neighbourhood=mask)


@claim(
    "enum-counts",
    "Native generators give the known class counts and agree with brute force on small orders",
    n=7,
    tree_n=10,
)
def check_enum_counts(census: Census) -> None:
    n_max = int(census.params["n"])
    tree_max = int(census.params["tree_n"])
    for n in range(1, n_max + 1):
        codes = {canonical_code(g) for g in census.graphs(n)}
        census.count(len(codes))
        if n in CONNECTED_COUNTS and len(codes) != CONNECTED_COUNTS[n]:
            census.violation(None, kind="connected", n=n, expected=CONNECTED_COUNTS[n], found=len(codes))
        if n <= 6 and census.source is None and codes != set(brute_force_classes(n)):
            census.violation(None, kind="connected", n=n, reason="differs from edge-subset classes")
    for n in range(1, tree_max + 1):
        codes = {canonical_code(g) for g in census.graphs(n, "trees")}
        census.count(len(codes))
        if n in TREE_COUNTS and len(codes) != TREE_COUNTS[n]:
            census.violation(None, kind="trees", n=n, expected=TREE_COUNTS[n], found=len(codes))
        if n <= 8 and census.source is None and codes != set(brute_force_tree_classes(n)):
            census.violation(None, kind="trees", n=n, reason="differs from labelled-tree classes")
