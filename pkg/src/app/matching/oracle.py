"""Brute-force matching counts, the reference for the recurrence engine."""

from typing import Optional, Sequence

from app.graphs.graph import Graph
from app.polynomials.polynomial import IntPolynomial
from config import settings
from exceptions import SizeLimitError


def matching_counts_oracle(graph: Graph, max_order: Optional[int] = None) -> list[int]:
    """p_G(k) for k = 0..n//2 by backtracking over independent edge sets."""
    limit = settings.oracle_max_order if max_order is None else max_order
    if graph.n > limit:
        raise SizeLimitError(
            f"oracle refuses graphs with {graph.n} vertices (limit {limit})", limit
        )
    counts = [0] * (graph.n // 2 + 1)
    edges = graph.edges()

    def extend(start: int, used: int, size: int) -> None:
        counts[size] += 1
        for i in range(start, len(edges)):
            u, v = edges[i]
            if not (used >> u & 1 or used >> v & 1):
                extend(i + 1, used | 1 << u | 1 << v, size + 1)

    extend(0, 0, 0)
    return counts


def polynomial_from_counts(n: int, counts: Sequence[int]) -> IntPolynomial:
    """sum_k (-1)^k p(k) x^(n-2k)."""
    coeffs = [0] * (n + 1)
    for k, count in enumerate(counts):
        coeffs[n - 2 * k] = -count if k % 2 else count
    return IntPolynomial(coeffs)
