"""Isomorph-free generators for trees and connected graphs.

Trees come from the level-sequence successor rule (one free tree per
canonical layout). Connected graphs grow one vertex at a time by canonical
augmentation: a child is kept only when its new vertex is, up to
automorphism, the vertex the canonical deletion rule would remove.
"""

from itertools import product
from typing import Iterator, Optional

from app.graphs.canonical import CanonicalCode, canonical_code, canonical_pair
from app.graphs.graph import Graph
from config import settings
from exceptions import ArgumentError, SizeLimitError

# Trees


def _split_tree(layout: list[int]) -> tuple[list[int], list[int]]:
    """Leftmost subtree of the root, and the root with everything else."""
    one_found = False
    m = None
    for i, level in enumerate(layout):
        if level == 1:
            if one_found:
                m = i
                break
            one_found = True
    if m is None:
        m = len(layout)
    left = [level - 1 for level in layout[1:m]]
    rest = [0] + layout[m:]
    return left, rest


def _next_rooted_tree(predecessor: list[int], p: Optional[int] = None) -> Optional[list[int]]:
    if p is None:
        p = len(predecessor) - 1
        while predecessor[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while predecessor[q] != predecessor[p] - 1:
        q -= 1
    result = list(predecessor)
    for i in range(p, len(result)):
        result[i] = result[i - p + q]
    return result


def _next_tree(candidate: list[int]) -> list[int]:
    """First layout at or after candidate that is the canonical layout of a free tree."""
    left, rest = _split_tree(candidate)
    left_height, rest_height = max(left), max(rest)
    valid = rest_height >= left_height
    if valid and rest_height == left_height:
        if len(left) > len(rest):
            valid = False
        elif len(left) == len(rest) and left > rest:
            valid = False
    if valid:
        return candidate
    p = len(left)
    successor = _next_rooted_tree(candidate, p)
    if candidate[p] > 2:
        new_left, _ = _split_tree(successor)
        suffix = list(range(1, max(new_left) + 2))
        successor[-len(suffix):] = suffix
    return successor


def _layout_to_graph(layout: list[int]) -> Graph:
    edges = []
    stack: list[int] = []
    for i, level in enumerate(layout):
        if stack:
            while layout[stack[-1]] >= level:
                stack.pop()
            edges.append((stack[-1], i))
        stack.append(i)
    return Graph.from_edges(len(layout), edges)


def enum_trees(n: int, max_order: Optional[int] = None) -> Iterator[Graph]:
    """One tree per isomorphism class on n vertices."""
    limit = settings.tree_enum_max_order if max_order is None else max_order
    if n < 1:
        raise ArgumentError(f"tree order must be at least 1, got {n}")
    if n > limit:
        raise SizeLimitError(f"tree generation is limited to n <= {limit}, got {n}", limit)
    if n == 1:
        yield Graph(1)
        return
    layout: Optional[list[int]] = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _next_tree(layout)
        yield _layout_to_graph(layout)
        layout = _next_rooted_tree(layout)


# Connected graphs


def _vertex_invariant(graph: Graph, v: int) -> tuple:
    degrees = graph.degrees()
    return degrees[v], tuple(sorted(degrees[w] for w in graph.neighbors(v)))


def _is_cut_vertex(graph: Graph, v: int) -> bool:
    rest = graph.vertex_mask & ~(1 << v)
    start = (rest & -rest).bit_length() - 1
    return graph.reach(start, rest) != rest


def is_canonical_extension(child: Graph) -> bool:
    """Whether the last vertex is a canonical deletion of child.

    Candidates are non-cut vertices of maximal (degree, neighbour degrees);
    among tied candidates the one placed last by the canonical labelling
    wins, and the last vertex is accepted when deleting it gives the same
    graph as deleting the winner.
    """
    v = child.n - 1
    target = _vertex_invariant(child, v)
    ties = []
    for w in range(child.n - 1):
        invariant = _vertex_invariant(child, w)
        if invariant < target:
            continue
        if _is_cut_vertex(child, w):
            continue
        if invariant > target:
            return False
        ties.append(w)
    if not ties:
        return True
    labelling, _ = canonical_pair(child)
    position = {u: i for i, u in enumerate(labelling)}
    winner = max(ties + [v], key=position.__getitem__)
    if winner == v:
        return True
    return canonical_code(child.delete_vertex(v)) == canonical_code(child.delete_vertex(winner))


def _children(parent: Graph) -> Iterator[Graph]:
    seen: set[CanonicalCode] = set()
    for mask in range(1, 1 << parent.n):
        child = parent.add_vertex(mask)
        if not is_canonical_extension(child):
            continue
        code = canonical_code(child)
        if code in seen:
            continue
        seen.add(code)
        yield child


def _grow(parent: Graph, n: int) -> Iterator[Graph]:
    if parent.n == n:
        yield parent
        return
    for child in _children(parent):
        yield from _grow(child, n)


def enum_connected(n: int, max_order: Optional[int] = None) -> Iterator[Graph]:
    """One connected graph per isomorphism class on n vertices, depth-first order."""
    limit = settings.native_enum_max_order if max_order is None else max_order
    if n < 1:
        raise ArgumentError(f"graph order must be at least 1, got {n}")
    if n > limit:
        raise SizeLimitError(
            f"native generation is limited to n <= {limit}; "
            f"pipe an external graph6 stream with --input for n = {n}",
            limit,
        )
    yield from _grow(Graph(1), n)


# Reference generators for small orders


def brute_force_classes(n: int, connected: bool = True) -> dict[CanonicalCode, Graph]:
    """Representatives of every isomorphism class over all edge subsets."""
    if n > 6:
        raise SizeLimitError(f"edge-subset enumeration is limited to n <= 6, got {n}", 6)
    pairs = [(i, j) for j in range(n) for i in range(j)]
    classes: dict[CanonicalCode, Graph] = {}
    for mask in range(1 << len(pairs)):
        graph = Graph.from_edges(n, [pairs[b] for b in range(len(pairs)) if mask >> b & 1])
        if connected and not graph.is_connected():
            continue
        classes.setdefault(canonical_code(graph), graph)
    return classes


def _prufer_tree(n: int, sequence: tuple[int, ...]) -> Graph:
    degree = [1] * n
    for v in sequence:
        degree[v] += 1
    edges = []
    for v in sequence:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def brute_force_tree_classes(n: int) -> dict[CanonicalCode, Graph]:
    """Tree classes from all labelled trees (Pruefer sequences)."""
    if n > 8:
        raise SizeLimitError(f"labelled-tree enumeration is limited to n <= 8, got {n}", 8)
    if n <= 2:
        tree = Graph(1) if n == 1 else Graph.path(2)
        return {canonical_code(tree): tree}
    classes: dict[CanonicalCode, Graph] = {}
    for sequence in product(range(n), repeat=n - 2):
        tree = _prufer_tree(n, sequence)
        classes.setdefault(canonical_code(tree), tree)
    return classes

