from collections import deque
from typing import Iterable, Iterator, Sequence

from exceptions import ArgumentError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitset adjacency.

    Instances are immutable; every structural operation returns a new graph.
    Bit ``j`` of ``adj[i]`` is set iff ``ij`` is an edge.
    """

    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, n: int, adj: Sequence[int] = ()) -> None:
        if n < 0:
            raise ArgumentError(f"vertex count must be non-negative, got {n}")
        adj = tuple(adj) if adj else (0,) * n
        if len(adj) != n:
            raise ArgumentError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full or row < 0:
                raise ArgumentError(f"row {v} references a vertex outside 0..{n - 1}")
            if row >> v & 1:
                raise ArgumentError(f"self-loop at vertex {v}")
            for w in iter_bits(row):
                if not adj[w] >> v & 1:
                    raise ArgumentError(f"adjacency is not symmetric at {v}-{w}")
        self._n = n
        self._adj = adj
        self._m = sum(row.bit_count() for row in adj) // 2

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...], m: int | None = None) -> "Graph":
        graph = object.__new__(cls)
        graph._n = n
        graph._adj = adj
        graph._m = sum(row.bit_count() for row in adj) // 2 if m is None else m
        return graph

    # Constructors

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ArgumentError(f"edge {u}-{v} outside 0..{n - 1}")
            if u == v:
                raise ArgumentError(f"self-loop at vertex {u}")
            if rows[u] >> v & 1:
                raise ArgumentError(f"duplicate edge {u}-{v}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls._trusted(n, (0,) * n, 0)

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ArgumentError(f"a cycle needs at least 3 vertices, got {n}")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls._trusted(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def star(cls, n: int) -> "Graph":
        """K_{1,n-1} with the center labelled 0."""
        if n < 1:
            raise ArgumentError("a star needs at least one vertex")
        return cls.from_edges(n, ((0, i) for i in range(1, n)))

    @classmethod
    def disjoint_union(cls, *graphs: "Graph") -> "Graph":
        rows: list[int] = []
        offset = 0
        for graph in graphs:
            rows.extend(row << offset for row in graph._adj)
            offset += graph._n
        return cls._trusted(offset, tuple(rows))

    @classmethod
    def join(cls, left: "Graph", right: "Graph") -> "Graph":
        """Disjoint union plus every edge between the two sides."""
        union = cls.disjoint_union(left, right)
        left_mask = (1 << left._n) - 1
        right_mask = ((1 << right._n) - 1) << left._n
        rows = [
            row | (right_mask if v < left._n else left_mask)
            for v, row in enumerate(union._adj)
        ]
        return cls._trusted(union._n, tuple(rows))

    # Basic queries

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def vertex_mask(self) -> int:
        return (1 << self._n) - 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise ArgumentError(f"vertex {v} outside 0..{self._n - 1}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def neighbor_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.neighbor_mask(v)))

    def degree(self, v: int) -> int:
        return self.neighbor_mask(v).bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self._adj]

    def degree_sequence(self) -> list[int]:
        return sorted(self.degrees())

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u, row in enumerate(self._adj)
            for v in iter_bits(row >> (u + 1) << (u + 1))
        ]

    def is_complete(self) -> bool:
        return self._m == self._n * (self._n - 1) // 2

    def is_tree(self) -> bool:
        return self._n >= 1 and self._m == self._n - 1 and self.is_connected()

    def are_twins(self, u: int, v: int) -> bool:
        """Adjacent vertices with identical neighbourhoods outside the pair."""
        if u == v or not self.has_edge(u, v):
            return False
        pair = (1 << u) | (1 << v)
        return self._adj[u] & ~pair == self._adj[v] & ~pair

    # Structural operations

    def delete_vertex(self, v: int) -> "Graph":
        """Remove v and relabel order-preservingly (i > v becomes i - 1)."""
        self._check_vertex(v)
        low_mask = (1 << v) - 1
        rows = []
        removed = self._adj[v].bit_count()
        for i, row in enumerate(self._adj):
            if i == v:
                continue
            rows.append((row & low_mask) | (row >> (v + 1) << v))
        return Graph._trusted(self._n - 1, tuple(rows), self._m - removed)

    def delete_vertices(self, vertices: Iterable[int]) -> "Graph":
        keep = self.vertex_mask
        for v in vertices:
            self._check_vertex(v)
            keep &= ~(1 << v)
        return self.induced_subgraph(list(iter_bits(keep)))

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ArgumentError(f"edge {u}-{v} is not present")
        rows = list(self._adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._trusted(self._n, tuple(rows), self._m - 1)

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ArgumentError(f"cannot add a self-loop at {u}")
        if self.has_edge(u, v):
            raise ArgumentError(f"edge {u}-{v} is already present")
        rows = list(self._adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(self._n, tuple(rows), self._m + 1)

    def add_vertex(self, neighbor_mask: int = 0) -> "Graph":
        """Append vertex n joined to the vertices in neighbor_mask."""
        if neighbor_mask & ~self.vertex_mask:
            raise ArgumentError("neighbourhood references a missing vertex")
        new = self._n
        rows = [row | ((neighbor_mask >> i & 1) << new) for i, row in enumerate(self._adj)]
        rows.append(neighbor_mask)
        return Graph._trusted(new + 1, tuple(rows), self._m + neighbor_mask.bit_count())

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on vertices, relabelled in the given order."""
        index = {}
        for position, v in enumerate(vertices):
            self._check_vertex(v)
            if v in index:
                raise ArgumentError(f"vertex {v} listed twice")
            index[v] = position
        selected = sum(1 << v for v in vertices)
        rows = []
        for v in vertices:
            row = 0
            for w in iter_bits(self._adj[v] & selected):
                row |= 1 << index[w]
            rows.append(row)
        return Graph._trusted(len(vertices), tuple(rows))

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """Graph in which old vertex i carries the new label permutation[i]."""
        if sorted(permutation) != list(range(self._n)):
            raise ArgumentError("relabelling must be a permutation of the vertices")
        rows = [0] * self._n
        for v, row in enumerate(self._adj):
            image = 0
            for w in iter_bits(row):
                image |= 1 << permutation[w]
            rows[permutation[v]] = image
        return Graph._trusted(self._n, tuple(rows), self._m)

    # Connectivity

    def reach(self, start: int, allowed: int | None = None) -> int:
        """Bitmask of vertices reachable from start inside the allowed mask."""
        allowed = self.vertex_mask if allowed is None else allowed
        seen = 1 << start
        frontier = seen
        while frontier:
            grown = 0
            for v in iter_bits(frontier):
                grown |= self._adj[v]
            frontier = grown & allowed & ~seen
            seen |= frontier
        return seen

    def component_masks(self, allowed: int | None = None) -> list[int]:
        remaining = self.vertex_mask if allowed is None else allowed
        masks = []
        while remaining:
            start = (remaining & -remaining).bit_length() - 1
            mask = self.reach(start, remaining)
            masks.append(mask)
            remaining &= ~mask
        return masks

    def components(self) -> list["Graph"]:
        """Connected components ordered by least original vertex label."""
        masks = self.component_masks()
        if len(masks) == 1:
            return [self]
        return [self.induced_subgraph(list(iter_bits(mask))) for mask in masks]

    def is_connected(self) -> bool:
        if self._n == 0:
            return True
        return self.reach(0) == self.vertex_mask

    def cut_vertices(self) -> list[int]:
        base = len(self.component_masks())
        full = self.vertex_mask
        return [
            v for v in range(self._n)
            if len(self.component_masks(full & ~(1 << v))) > base
        ]

    def connectivity(self) -> int:
        """Vertex connectivity; K_n gives n-1 and disconnected graphs give 0."""
        n = self._n
        if n <= 1 or not self.is_connected():
            return 0
        if self.is_complete():
            return n - 1
        # Min-degree vertex v: a minimum separator either misses v or
        # separates two of its non-adjacent neighbours.
        degrees = self.degrees()
        v = degrees.index(min(degrees))
        best = degrees[v]
        for u in range(n):
            if u != v and not self._adj[v] >> u & 1:
                best = min(best, self._local_connectivity(v, u))
        neighbours = self.neighbors(v)
        for i, x in enumerate(neighbours):
            for y in neighbours[i + 1:]:
                if not self._adj[x] >> y & 1:
                    best = min(best, self._local_connectivity(x, y))
        return best

    def _local_connectivity(self, s: int, t: int) -> int:
        """Internally disjoint s-t paths for non-adjacent s, t (unit vertex capacities)."""
        n = self._n
        capacity: dict[tuple[int, int], int] = {}
        arcs: list[list[int]] = [[] for _ in range(2 * n)]

        def add_arc(a: int, b: int, cap: int) -> None:
            if (a, b) not in capacity:
                capacity[(a, b)] = 0
                arcs[a].append(b)
                if (b, a) not in capacity:
                    capacity[(b, a)] = 0
                    arcs[b].append(a)
            capacity[(a, b)] += cap

        # vertex x is split into 2x (in) and 2x+1 (out)
        for x in range(n):
            add_arc(2 * x, 2 * x + 1, n if x in (s, t) else 1)
        for a, b in self.edges():
            add_arc(2 * a + 1, 2 * b, n)
            add_arc(2 * b + 1, 2 * a, n)

        source, sink = 2 * s + 1, 2 * t
        flow = 0
        while True:
            parent: dict[int, int] = {source: -1}
            queue = deque([source])
            while queue and sink not in parent:
                a = queue.popleft()
                for b in arcs[a]:
                    if b not in parent and capacity[(a, b)] > 0:
                        parent[b] = a
                        queue.append(b)
            if sink not in parent:
                return flow
            b = sink
            while parent[b] != -1:
                a = parent[b]
                capacity[(a, b)] -= 1
                capacity[(b, a)] += 1
                b = a
            flow += 1

    # Dunder

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"
