"""Deterministic constructors for the named graphs and parameterised families.

Labelling convention: spine (path or cycle) vertices first in path order,
then pendant vertices in the order they are attached.
"""

from enum import Enum
from typing import Iterable, Optional, Sequence

from app.graphs.graph import Graph, iter_bits
from exceptions import ArgumentError


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ArgumentError(message)


def caterpillar(spine: int, attachments: Sequence[int]) -> Graph:
    """Path v_0..v_{spine-1} with one new pendant per entry of attachments."""
    edges = [(i, i + 1) for i in range(spine - 1)]
    for offset, v in enumerate(attachments):
        _require(0 <= v < spine, f"attachment vertex {v} is not on the spine")
        edges.append((v, spine + offset))
    return Graph.from_edges(spine + len(attachments), edges)


def sunlet(cycle: int, attachments: Sequence[int]) -> Graph:
    """Cycle v_0..v_{cycle-1} with one new pendant per entry of attachments."""
    edges = [(i, (i + 1) % cycle) for i in range(cycle)]
    for offset, v in enumerate(attachments):
        edges.append((v, cycle + offset))
    return Graph.from_edges(cycle + len(attachments), edges)


def path_w(n: int) -> Graph:
    """P_{n-2} with a pendant on each quasi-pendant vertex."""
    _require(n >= 6, f"W_n needs n >= 6, got {n}")
    return caterpillar(n - 2, [1, n - 4])


def path_w_star(m: int) -> Graph:
    """W_{m-1} with a second pendant on its far quasi-pendant vertex."""
    _require(m >= 7, f"W*_m needs m >= 7, got {m}")
    return caterpillar(m - 3, [1, m - 5, m - 5])


def path_y(n: int) -> Graph:
    """P_{n-1} with a pendant on v_1; Y_3 is P_3 and Y_4 is K_{1,3}."""
    _require(n >= 3, f"Y_n needs n >= 3, got {n}")
    return caterpillar(n - 1, [1])


def path_y_star(n: int) -> Graph:
    _require(n >= 4, f"Y*_n needs n >= 4, got {n}")
    return caterpillar(n - 2, [1, 1])


def path_r(n: int) -> Graph:
    _require(n >= 7, f"R_n needs n >= 7, got {n}")
    return caterpillar(n - 3, [1, 2, 3])


def path_r_star(n: int) -> Graph:
    _require(n >= 8, f"R*_n needs n >= 8, got {n}")
    return caterpillar(n - 4, [1, 1, 2, 2])


def path_f(n: int) -> Graph:
    _require(n >= 10, f"F_n needs n >= 10, got {n}")
    return caterpillar(n - 4, [1, 2, 3, n - 6])


def path_f_star(n: int) -> Graph:
    _require(n >= 11, f"F*_n needs n >= 11, got {n}")
    return caterpillar(n - 6, [1, 1, 2, 2, n - 8, n - 8])


def cycle_star(n: int) -> Graph:
    """C_{n-3} with two pendants on v_0 and one on v_2."""
    _require(n >= 6, f"C*_n needs n >= 6, got {n}")
    return sunlet(n - 3, [0, 0, 2])


def cycle_hat(n: int) -> Graph:
    """C_{n-5} with pendants on v_0, v_3, v_4 and two on v_2."""
    _require(n >= 10, f"hat-C_n needs n >= 10, got {n}")
    return sunlet(n - 5, [0, 2, 2, 3, 4])


def cycle_plus(n: int) -> Graph:
    _require(n >= 5, f"C+_n needs n >= 5, got {n}")
    return sunlet(n - 1, [0])


def graph_h1() -> Graph:
    """Triangle 0-1-2 with the path 0-3-4 hanging from vertex 0."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4)])


def graph_h2() -> Graph:
    """Four-cycle 0-1-2-3 with a pendant 4 on vertex 0."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])


G_STAR_LABELS = {"u": 0, "v1": 1, "v2": 2, "w1": 3, "w2": 4, "w3": 5, "z1": 6, "z2": 9}


def graph_g_star() -> Graph:
    """Hub u on the edge v1v2 (both joined to w1..w3) and on two triangles via z1, z2."""
    edges = [(0, 1), (0, 2), (1, 2), (0, 6), (0, 9)]
    for w in (3, 4, 5):
        edges += [(1, w), (2, w)]
    for a in (6, 9):
        edges += [(a, a + 1), (a + 1, a + 2), (a, a + 2)]
    return Graph.from_edges(12, edges)


# Families built around a hub


class Attachment(str, Enum):
    """Which endpoints of a K_2 the hub is joined to."""

    FIRST = "first"
    SECOND = "second"
    BOTH = "both"


def _f_pair_count(n: int) -> int:
    return (n - 1) // 2 if n % 2 else (n - 2) // 2


def make_f_family(n: int, pattern: Sequence[Attachment]) -> Graph:
    """Member of the extremal family for the bound (n-3)/2 and (n-4)/2.

    Odd n: hub 0, K_2 number i on (1 + 2i, 2 + 2i).
    Even n: hub w = 0 with its K_2 partner 1, K_2 number i on (2 + 2i, 3 + 2i).
    """
    _require(n >= 7, f"the hub family needs n >= 7, got {n}")
    pairs = _f_pair_count(n)
    _require(
        len(pattern) == pairs,
        f"pattern must give one attachment per K_2 ({pairs}), got {len(pattern)}",
    )
    start = 1 if n % 2 else 2
    edges = [] if n % 2 else [(0, 1)]
    for i, attachment in enumerate(pattern):
        a, b = start + 2 * i, start + 2 * i + 1
        edges.append((a, b))
        attachment = Attachment(attachment)
        if attachment in (Attachment.FIRST, Attachment.BOTH):
            edges.append((0, a))
        if attachment in (Attachment.SECOND, Attachment.BOTH):
            edges.append((0, b))
    return Graph.from_edges(n, edges)


def hub_tree(n: int) -> Graph:
    """The only tree of the hub family: every K_2 joined by one edge."""
    _require(n >= 6, f"T_n needs n >= 6, got {n}")
    pairs = _f_pair_count(n)
    start = 1 if n % 2 else 2
    edges = [] if n % 2 else [(0, 1)]
    for i in range(pairs):
        a = start + 2 * i
        edges += [(a, a + 1), (0, a)]
    return Graph.from_edges(n, edges)


def make_h_family(
    components: Sequence[Graph],
    t: int,
    wiring: Sequence[Sequence[Iterable[int]]],
    inner_edges: Iterable[tuple[int, int]] = (),
) -> Graph:
    """t hub vertices (labels 0..t-1) wired into each component, components after.

    ``wiring[a][i]`` lists the component-local vertices of component i
    joined to hub a; every entry must be nonempty.
    """
    _require(t >= 1, f"at least one hub vertex is needed, got t={t}")
    _require(len(wiring) == t, f"wiring must have one row per hub ({t}), got {len(wiring)}")
    for i, component in enumerate(components):
        _require(component.n > 0 and component.is_connected(), f"component {i} is not connected")
    edges = []
    offsets = []
    offset = t
    for component in components:
        offsets.append(offset)
        edges += [(offset + a, offset + b) for a, b in component.edges()]
        offset += component.n
    for hub, row in enumerate(wiring):
        _require(
            len(row) == len(components),
            f"hub {hub} must be wired to each of the {len(components)} components",
        )
        for i, targets in enumerate(row):
            targets = sorted(set(targets))
            _require(bool(targets), f"hub {hub} has no edge into component {i}")
            for v in targets:
                _require(0 <= v < components[i].n, f"component {i} has no vertex {v}")
                edges.append((hub, offsets[i] + v))
    for a, b in inner_edges:
        _require(0 <= a < t and 0 <= b < t and a != b, f"inner edge {a}-{b} is not between hubs")
        edges.append((min(a, b), max(a, b)))
    return Graph.from_edges(offset, sorted(set(edges)))


def make_q(
    g0prime: Graph,
    v: int,
    others: Sequence[Graph],
    wiring: Optional[Sequence[Iterable[int]]] = None,
) -> Graph:
    """Hub u = 0 joined to v, its twin v' and each other component.

    Labels: u = 0, g0prime on 1..n0, the twin v' = n0 + 1, then the other
    components in order. ``wiring[i]`` defaults to the first vertex of
    component i.
    """
    _require(len(others) >= 2, f"need at least two further components, got {len(others)}")
    _require(0 <= v < g0prime.n, f"vertex {v} is not in the base component")
    n0 = g0prime.n
    twin = n0 + 1
    edges = [(1 + a, 1 + b) for a, b in g0prime.edges()]
    edges += [(twin, 1 + w) for w in iter_bits(g0prime.neighbor_mask(v))]
    edges += [(1 + v, twin), (0, 1 + v), (0, twin)]
    wiring = wiring if wiring is not None else [[0]] * len(others)
    _require(len(wiring) == len(others), "wiring must list targets for every further component")
    offset = twin + 1
    for i, (component, targets) in enumerate(zip(others, wiring)):
        targets = sorted(set(targets))
        _require(bool(targets), f"the hub has no edge into component {i}")
        edges += [(offset + a, offset + b) for a, b in component.edges()]
        for w in targets:
            _require(0 <= w < component.n, f"component {i} has no vertex {w}")
            edges.append((0, offset + w))
        offset += component.n
    return Graph.from_edges(offset, edges)


def edge_addition_pair(graph: Graph, u: int) -> tuple[int, int]:
    """The two neighbours of u to join, after checking the structural preconditions.

    u must be a cut vertex of degree three whose deletion leaves three
    components, at least one trivial; the remaining neighbour is the
    lowest-labelled pendant neighbour.
    """
    _require(0 <= u < graph.n, f"vertex {u} outside 0..{graph.n - 1}")
    _require(graph.degree(u) == 3, f"vertex {u} has degree {graph.degree(u)}, not 3")
    pieces = graph.component_masks(graph.vertex_mask & ~(1 << u))
    _require(len(pieces) == 3, f"deleting {u} leaves {len(pieces)} components, not 3")
    _require(
        any(piece.bit_count() == 1 for piece in pieces),
        f"deleting {u} leaves no trivial component",
    )
    neighbours = graph.neighbors(u)
    pendants = [w for w in neighbours if graph.degree(w) == 1]
    _require(bool(pendants), f"vertex {u} has no pendant neighbour")
    u1, u2 = (w for w in neighbours if w != pendants[0])
    return u1, u2


def add_critical_edge(graph: Graph, u: int) -> Graph:
    u1, u2 = edge_addition_pair(graph, u)
    return graph.add_edge(u1, u2)
