"""Path trees: one node per simple path from a root, parent = longest proper prefix."""

from dataclasses import dataclass
from typing import Optional

from app.graphs.graph import Graph, iter_bits
from app.matching.service import MatchingService, get_matching_service
from app.polynomials.polynomial import IntPolynomial, divide_exact
from config import settings
from exceptions import ArgumentError, NotDivisibleError, SizeLimitError


@dataclass(frozen=True)
class PathTree:
    tree: Graph
    paths: list[tuple[int, ...]]
    root: int = 0


def build_path_tree(graph: Graph, u: int, node_limit: Optional[int] = None) -> PathTree:
    """Path tree of a connected graph relative to u; nodes in depth-first order."""
    if not 0 <= u < graph.n:
        raise ArgumentError(f"vertex {u} outside 0..{graph.n - 1}")
    if not graph.is_connected():
        raise ArgumentError("path trees are defined here for connected graphs only")
    limit = settings.path_tree_node_limit if node_limit is None else node_limit
    adj = graph.adj
    paths: list[tuple[int, ...]] = []
    edges: list[tuple[int, int]] = []
    # (path, visited mask, index of the parent node)
    stack = [((u,), 1 << u, -1)]
    while stack:
        path, visited, parent = stack.pop()
        index = len(paths)
        if index >= limit:
            raise SizeLimitError(
                f"path tree exceeds {limit} nodes; raise path_tree_node_limit to continue",
                limit,
            )
        paths.append(path)
        if parent >= 0:
            edges.append((parent, index))
        extensions = list(iter_bits(adj[path[-1]] & ~visited))
        for w in reversed(extensions):
            stack.append((path + (w,), visited | 1 << w, index))
    return PathTree(tree=Graph.from_edges(len(paths), edges), paths=paths)


@dataclass(frozen=True)
class PathTreeCheck:
    tree_order: int
    divisible: bool
    quotient: Optional[IntPolynomial]
    quotient_identity: bool


def verify_path_tree_divisibility(
    graph: Graph,
    u: int,
    service: Optional[MatchingService] = None,
    node_limit: Optional[int] = None,
) -> PathTreeCheck:
    """mu(G) | mu(T) and mu(G - u) mu(T) = mu(T - root) mu(G)."""
    engine = service or get_matching_service()
    path_tree = build_path_tree(graph, u, node_limit)
    tree_poly = engine.matching_polynomial(path_tree.tree)
    graph_poly = engine.matching_polynomial(graph)
    try:
        quotient: Optional[IntPolynomial] = divide_exact(tree_poly, graph_poly)
    except NotDivisibleError:
        quotient = None
    identity = (
        engine.matching_polynomial(graph.delete_vertex(u)) * tree_poly
        == engine.matching_polynomial(path_tree.tree.delete_vertex(path_tree.root)) * graph_poly
    )
    return PathTreeCheck(
        tree_order=path_tree.tree.n,
        divisible=quotient is not None,
        quotient=quotient,
        quotient_identity=identity,
    )
