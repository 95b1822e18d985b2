"""Canonical labelling by partition refinement and backtracking.

The search individualises one vertex of the first non-singleton cell at a
time, refines to an equitable partition, and keeps the leaf whose
relabelled adjacency bitstring (graph6 column order) is smallest.
Automorphisms discovered between equivalent leaves prune sibling branches.
"""

from itertools import permutations
from typing import Optional, TypeAlias

from app.graphs.graph import Graph
from app.graphs.graph6 import write_graph6

CanonicalCode: TypeAlias = bytes


def refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts into every cell until stable."""
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        refined: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                key = tuple((row & mask).bit_count() for mask in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                refined.append(cell)
                continue
            changed = True
            refined.extend(groups[key] for key in sorted(groups))
        cells = refined
        if not changed:
            return cells


def _leaf_bits(adj: tuple[int, ...], labelling: list[int]) -> int:
    bits = 0
    for j in range(1, len(labelling)):
        row = adj[labelling[j]]
        for i in range(j):
            bits = bits << 1 | (row >> labelling[i] & 1)
    return bits


class _Search:
    def __init__(self, graph: Graph) -> None:
        self.adj = graph.adj
        self.n = graph.n
        self.first_bits: Optional[int] = None
        self.first_path: list[int] = []
        self.first_labelling: list[int] = []
        self.best_bits: Optional[int] = None
        self.best_labelling: list[int] = []
        self.generators: list[list[int]] = []

    def run(self) -> tuple[list[int], int]:
        start = refine(self.adj, [list(range(self.n))]) if self.n else []
        self._descend(start, [])
        return self.best_labelling, self.best_bits or 0

    def _record_automorphism(self, source: list[int], target: list[int]) -> None:
        image = [0] * self.n
        for a, b in zip(source, target):
            image[a] = b
        if any(image[v] != v for v in range(self.n)):
            self.generators.append(image)

    def _equivalent_to_tried(self, v: int, tried: list[int], fixed: list[int]) -> bool:
        generators = [g for g in self.generators if all(g[x] == x for x in fixed)]
        if not generators:
            return False
        orbit = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for g in generators:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        return any(u in orbit for u in tried)

    def _leaf(self, cells: list[list[int]], path: list[int]) -> Optional[int]:
        labelling = [cell[0] for cell in cells]
        bits = _leaf_bits(self.adj, labelling)
        if self.first_bits is None:
            self.first_bits = bits
            self.first_path = list(path)
            self.first_labelling = labelling
            self.best_bits = bits
            self.best_labelling = labelling
            return None
        if bits == self.first_bits:
            self._record_automorphism(self.first_labelling, labelling)
            # this subtree is the image of the fully explored first one
            common = 0
            limit = min(len(path), len(self.first_path))
            while common < limit and path[common] == self.first_path[common]:
                common += 1
            return common
        if bits == self.best_bits:
            self._record_automorphism(self.best_labelling, labelling)
        elif bits < self.best_bits:
            self.best_bits = bits
            self.best_labelling = labelling
        return None

    def _descend(self, cells: list[list[int]], path: list[int]) -> Optional[int]:
        """Explore the subtree; a returned level means unwind to that depth."""
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            return self._leaf(cells, path)
        cell = cells[target]
        tried: list[int] = []
        for v in sorted(cell):
            if tried and self._equivalent_to_tried(v, tried, path):
                continue
            tried.append(v)
            child = cells[:target] + [[v], [w for w in cell if w != v]] + cells[target + 1:]
            jump = self._descend(refine(self.adj, child), path + [v])
            if jump is not None and jump < len(path):
                return jump
        return None


def canonical_labelling(graph: Graph) -> list[int]:
    """Vertex order of the canonical form: position i holds an original vertex."""
    labelling, _ = _Search(graph).run()
    return labelling


def _pack(n: int, bits: int) -> CanonicalCode:
    width = (n * (n - 1) // 2 + 7) // 8
    return n.to_bytes(4, "big") + bits.to_bytes(width, "big")


def canonical_code(graph: Graph) -> CanonicalCode:
    """Isomorphism-invariant key; equal codes iff isomorphic graphs."""
    if graph.n <= 1:
        return _pack(graph.n, 0)
    _, bits = _Search(graph).run()
    return _pack(graph.n, bits)


def canonical_pair(graph: Graph) -> tuple[list[int], CanonicalCode]:
    """Canonical labelling and code from one search."""
    if graph.n <= 1:
        return list(range(graph.n)), _pack(graph.n, 0)
    labelling, bits = _Search(graph).run()
    return labelling, _pack(graph.n, bits)


def canonical_form(graph: Graph) -> Graph:
    labelling = canonical_labelling(graph)
    permutation = [0] * graph.n
    for position, v in enumerate(labelling):
        permutation[v] = position
    return graph.relabel(permutation)


def canonical_graph6(graph: Graph) -> str:
    return write_graph6(canonical_form(graph))


def brute_force_code(graph: Graph) -> CanonicalCode:
    """Minimum bitstring over all n! labellings; reference for small graphs."""
    best = None
    for labelling in permutations(range(graph.n)):
        bits = _leaf_bits(graph.adj, list(labelling))
        if best is None or bits < best:
            best = bits
    return _pack(graph.n, best or 0)
