from collections import deque
from typing import Optional

from app.graphs.canonical import canonical_code
from app.graphs.graph import Graph, iter_bits
from app.matching.cache import MemoCache
from app.polynomials.factorization import squarefree_decomposition
from app.polynomials.polynomial import ONE, X, IntPolynomial
from config import settings
from exceptions import ArgumentError

_K2 = IntPolynomial((-1, 0, 1))


def _shortest_cycle_edge(graph: Graph) -> tuple[int, int]:
    """An edge lying on a shortest cycle of a graph that has one.

    A BFS from r closes a walk of length d(x) + d(y) + 1 through each
    non-tree edge xy; the minimum over all roots is attained with r on a
    shortest cycle, and the closing edge then lies on that cycle.
    """
    adj = graph.adj
    best: Optional[tuple[int, int, int]] = None
    for root in range(graph.n):
        depth = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * depth[x] + 1 >= best[0]:
                break
            for y in iter_bits(adj[x]):
                if y not in depth:
                    depth[y] = depth[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = depth[x] + depth[y] + 1
                    if best is None or length < best[0]:
                        best = (length, min(x, y), max(x, y))
        if best is not None and best[0] == 3:
            break
    if best is None:
        raise ArgumentError("graph is acyclic")
    return best[1], best[2]


def tree_polynomial(tree: Graph, root: int = 0) -> IntPolynomial:
    """mu of a tree by the leaf-edge recursion, unrolled bottom-up.

    For the subtree T_v with children c: mu(T_v - v) = prod mu(T_c) and
    mu(T_v) = x prod mu(T_c) - sum_c mu(T_c - c) prod_{c' != c} mu(T_c').
    """
    if tree.n == 0:
        return ONE
    adj = tree.adj
    order = [root]
    parent = {root: -1}
    for v in order:
        for w in iter_bits(adj[v]):
            if w not in parent:
                parent[w] = v
                order.append(w)
    whole: dict[int, IntPolynomial] = {}
    without_top: dict[int, IntPolynomial] = {}
    for v in reversed(order):
        children = [w for w in iter_bits(adj[v]) if parent.get(w) == v]
        prefix = [ONE]
        for c in children:
            prefix.append(prefix[-1] * whole[c])
        suffix = ONE
        removed = IntPolynomial()
        for i in range(len(children) - 1, -1, -1):
            c = children[i]
            removed = removed + without_top[c] * prefix[i] * suffix
            suffix = suffix * whole[c]
        without_top[v] = prefix[-1]
        whole[v] = X * prefix[-1] - removed
        for c in children:
            del whole[c], without_top[c]
    return whole[root]


class MatchingService:
    """Exact matching polynomials through the edge recurrence.

    Components are multiplied; trees go through the rooted recursion;
    any other connected component is split on an edge of a shortest cycle
    and memoised under its canonical code.
    """

    def __init__(self, memo_cap: Optional[int] = None) -> None:
        self.cache = MemoCache(memo_cap)

    def matching_polynomial(self, graph: Graph) -> IntPolynomial:
        result = ONE
        for component in graph.components():
            result = result * self._connected(component)
        return result

    def _connected(self, graph: Graph) -> IntPolynomial:
        if graph.n == 1:
            return X
        if graph.n == 2:
            return _K2
        if graph.m == graph.n - 1:
            return tree_polynomial(graph)
        key = canonical_code(graph)
        cached = self.cache.get(key)
        if cached is not None:
            return cached
        u, v = _shortest_cycle_edge(graph)
        result = self._connected(graph.delete_edge(u, v)) - self.matching_polynomial(
            graph.delete_vertices((u, v))
        )
        self.cache.put(key, result)
        return result

    def vertex_rule_polynomial(self, graph: Graph) -> IntPolynomial:
        """mu(G) = x mu(G - u) - sum_{v ~ u} mu(G - u - v), over vertex subsets.

        Shares nothing with the edge-rule engine; used as a cross-check.
        """
        adj = graph.adj
        table: dict[int, IntPolynomial] = {0: ONE}

        def mu(mask: int) -> IntPolynomial:
            found = table.get(mask)
            if found is not None:
                return found
            u = (mask & -mask).bit_length() - 1
            rest = mask & ~(1 << u)
            value = X * mu(rest)
            for v in iter_bits(adj[u] & rest):
                value = value - mu(rest & ~(1 << v))
            table[mask] = value
            return value

        return mu(graph.vertex_mask)

    def max_nonzero_root_multiplicity(self, graph: Graph) -> tuple[int, Optional[IntPolynomial]]:
        """Largest multiplicity among nonzero roots and the squarefree factor carrying it.

        Ties go to the lowest degree, then to the smaller coefficient vector.
        """
        stripped = self.matching_polynomial(graph).strip_x()
        if stripped.is_constant():
            return 0, None
        decomposition = squarefree_decomposition(stripped)
        top = max(multiplicity for _, multiplicity in decomposition)
        candidates = [factor for factor, multiplicity in decomposition if multiplicity == top]
        return top, min(candidates, key=lambda f: f.sort_key())


_service: Optional[MatchingService] = None


def get_matching_service() -> MatchingService:
    """Process-wide engine sharing one memo table."""
    global _service
    if _service is None:
        _service = MatchingService(settings.memo_cap)
    return _service
