"""
Unit tests for the matching-polynomial engine, its oracle and path trees.
"""

import random

import pytest

from app.families import constructions
from app.graphs.graph import Graph
from app.matching.oracle import matching_counts_oracle, polynomial_from_counts
from app.matching.path_tree import build_path_tree, verify_path_tree_divisibility
from app.matching.service import MatchingService, tree_polynomial
from app.polynomials.polynomial import IntPolynomial
from exceptions import ArgumentError, SizeLimitError


TEST_SEED = 7
TEST_SAMPLES = 30

# Hand-checked matching polynomials
TEST_KNOWN = [
    (Graph.complete(3), "x^3-3x"),
    (Graph.complete(4), "x^4-6x^2+3"),
    (Graph.cycle(4), "x^4-4x^2+2"),
    (Graph.cycle(5), "x^5-5x^3+5x"),
    (Graph.path(4), "x^4-3x^2+1"),
    (constructions.path_w(6), "x^6-5x^4+4x^2"),
    (constructions.path_y(5), "x^5-4x^3+2x"),
    (constructions.path_y(4), "x^4-3x^2"),
    (constructions.path_y(6), "x^6-5x^4+5x^2"),
    (constructions.path_y(7), "x^7-6x^5+9x^3-2x"),
    (constructions.graph_h1(), "x^5-5x^3+4x"),
    (constructions.path_r(7), "x^7-6x^5+8x^3-2x"),
    (constructions.path_r(8), "x^8-7x^6+12x^4-4x^2"),
    (constructions.path_f_star(11), "x^11-10x^9+27x^7-18x^5"),
    (constructions.graph_g_star(), "x^12-17x^10+97x^8-227x^6+198x^4-36x^2"),
]

TEST_G_STAR_DELETED = [
    ("u", "x^11-13x^9+57x^7-99x^5+54x^3"),
    ("v1", "x^11-12x^9+47x^7-66x^5+18x^3"),
    ("w1", "x^11-15x^9+75x^7-149x^5+100x^3-12x"),
    ("z1", "x^11-14x^9+60x^7-96x^5+55x^3-6x"),
]


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


class TestMatchingPolynomial:
    @pytest.mark.parametrize("graph, expected", TEST_KNOWN)
    def test_known_polynomials(self, engine, graph, expected):
        assert engine.matching_polynomial(graph).to_text() == expected

    @pytest.mark.parametrize("label, expected", TEST_G_STAR_DELETED)
    def test_g_star_vertex_deleted(self, engine, label, expected):
        g_star = constructions.graph_g_star()
        deleted = g_star.delete_vertex(constructions.G_STAR_LABELS[label])
        assert engine.matching_polynomial(deleted).to_text() == expected

    def test_empty_graph_has_polynomial_one(self, engine):
        assert engine.matching_polynomial(Graph.empty(0)) == IntPolynomial.constant(1)
        assert engine.matching_polynomial(Graph.empty(3)).to_text() == "x^3"

    def test_tree_recursion_matches_engine(self, engine):
        tree = constructions.hub_tree(9)
        assert tree_polynomial(tree) == engine.vertex_rule_polynomial(tree)
        assert tree_polynomial(tree, root=4) == tree_polynomial(tree)

    def test_engine_agrees_with_vertex_rule_and_oracle(self, engine):
        rng = random.Random(TEST_SEED)
        for _ in range(TEST_SAMPLES):
            graph = random_graph(rng, rng.randint(1, 9))
            mu = engine.matching_polynomial(graph)
            assert mu == engine.vertex_rule_polynomial(graph)
            assert mu == polynomial_from_counts(graph.n, matching_counts_oracle(graph))

    def test_disjoint_union_multiplies(self, engine):
        left, right = Graph.cycle(5), constructions.graph_h1()
        union = Graph.disjoint_union(left, right)
        assert engine.matching_polynomial(union) == (
            engine.matching_polynomial(left) * engine.matching_polynomial(right)
        )

    def test_sign_symmetry(self, engine):
        rng = random.Random(TEST_SEED + 1)
        for _ in range(10):
            graph = random_graph(rng, 8)
            mu = engine.matching_polynomial(graph)
            expected = mu if graph.n % 2 == 0 else -mu
            assert mu.reflect() == expected

    def test_isomorphic_graphs_share_memo_entries(self, engine):
        graph = Graph.cycle(6)
        engine.matching_polynomial(graph)
        misses = engine.cache.misses
        engine.matching_polynomial(graph.relabel([3, 4, 5, 0, 1, 2]))
        assert engine.cache.misses == misses
        assert engine.cache.hits >= 1

    def test_memo_cap_bounds_entries(self):
        capped = MatchingService(memo_cap=2)
        for n in range(3, 9):
            capped.matching_polynomial(Graph.complete(n))
        assert len(capped.cache) <= 2
        assert capped.matching_polynomial(Graph.complete(4)).to_text() == "x^4-6x^2+3"


class TestMaxNonzeroRootMultiplicity:
    def test_hub_tree_reaches_the_bound(self, engine):
        k, factor = engine.max_nonzero_root_multiplicity(constructions.hub_tree(7))
        assert k == 2
        assert factor.to_text() == "x^2-1"

    def test_simple_roots(self, engine):
        k, factor = engine.max_nonzero_root_multiplicity(constructions.path_w(6))
        assert k == 1
        assert factor.to_text() == "x^4-5x^2+4"

    def test_no_nonzero_root(self, engine):
        assert engine.max_nonzero_root_multiplicity(Graph.empty(1)) == (0, None)


class TestOracle:
    def test_counts_for_k4(self):
        assert matching_counts_oracle(Graph.complete(4)) == [1, 6, 3]

    def test_polynomial_from_counts(self):
        assert polynomial_from_counts(4, [1, 6, 3]).to_text() == "x^4-6x^2+3"

    def test_size_guard(self):
        with pytest.raises(SizeLimitError) as exc:
            matching_counts_oracle(Graph.complete(4), max_order=3)
        assert exc.value.limit == 3


class TestPathTree:
    def test_triangle_path_tree_is_p5(self, engine):
        path_tree = build_path_tree(Graph.complete(3), 0)
        assert path_tree.tree.n == 5
        assert path_tree.paths[0] == (0,)
        assert engine.matching_polynomial(path_tree.tree) == engine.matching_polynomial(Graph.path(5))

    def test_divisibility_on_triangle(self, engine):
        check = verify_path_tree_divisibility(Graph.complete(3), 0, engine)
        assert check.tree_order == 5
        assert check.divisible
        assert check.quotient.to_text() == "x^2-1"
        assert check.quotient_identity

    def test_tree_is_its_own_path_tree(self, engine):
        tree = constructions.path_y(6)
        check = verify_path_tree_divisibility(tree, 2, engine)
        assert check.tree_order == tree.n
        assert check.quotient == IntPolynomial.constant(1)

    @pytest.mark.parametrize("u", range(5))
    def test_divisibility_on_h2(self, engine, u):
        check = verify_path_tree_divisibility(constructions.graph_h2(), u, engine)
        assert check.divisible and check.quotient_identity

    def test_disconnected_graph_rejected(self):
        with pytest.raises(ArgumentError):
            build_path_tree(Graph.empty(2), 0)

    def test_node_limit(self):
        with pytest.raises(SizeLimitError):
            build_path_tree(Graph.complete(5), 0, node_limit=10)
