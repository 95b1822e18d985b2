"""
Unit tests for the tree and connected-graph generators, critical filtering and n_theta.
"""

from itertools import count

import pytest

from app.enumeration import schemas
from app.enumeration.generators import (
    brute_force_classes,
    brute_force_tree_classes,
    enum_connected,
    enum_trees,
)
from app.enumeration.manager import EnumerationManager
from app.families import constructions
from app.graphs.canonical import canonical_code
from app.graphs.graph import Graph
from app.polynomials.algebraic import AlgebraicRoot
from utils.pagination import PaginatedResponse, page_window


TEST_TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}
TEST_CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
TEST_CRITICAL_AT_SEVEN = 16

TEST_N_THETA = [
    ("x-1", 2, [Graph.complete(2)]),
    ("x^2-2", 3, [Graph.path(3)]),
    ("x^2-3", 3, [Graph.complete(3)]),
    ("x", 1, [Graph.empty(1)]),
]


def codes(graphs) -> list:
    return [canonical_code(g) for g in graphs]


class TestTreeGenerator:
    @pytest.mark.parametrize("n, expected", sorted(TEST_TREE_COUNTS.items()))
    def test_counts(self, n, expected):
        trees = list(enum_trees(n))
        assert len(trees) == expected
        assert all(t.is_tree() for t in trees)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_no_duplicates_and_matches_labelled_trees(self, n):
        found = codes(enum_trees(n))
        assert len(set(found)) == len(found)
        assert set(found) == set(brute_force_tree_classes(n))


class TestConnectedGenerator:
    @pytest.mark.parametrize("n, expected", sorted(TEST_CONNECTED_COUNTS.items()))
    def test_counts(self, n, expected):
        graphs = list(enum_connected(n))
        assert len(graphs) == expected
        assert all(g.is_connected() and g.n == n for g in graphs)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_edge_subset_classes(self, n):
        found = codes(enum_connected(n))
        assert len(set(found)) == len(found)
        assert set(found) == set(brute_force_classes(n))

    @pytest.mark.slow
    def test_order_eight(self):
        assert sum(1 for _ in enum_connected(8)) == 11117


class TestFilterCritical:
    def test_sixteen_one_critical_graphs_of_order_seven(self, enumeration, theta_one):
        critical = list(enumeration.filter_critical(enum_connected(7), theta_one, jobs=1))
        assert len(critical) == TEST_CRITICAL_AT_SEVEN

    def test_no_one_critical_trees_below_nine(self, enumeration, theta_one):
        assert list(enumeration.filter_critical(enum_trees(7), theta_one, jobs=1)) == []

    def test_known_critical_trees_pass_the_filter(self, enumeration, theta_one):
        graphs = [constructions.path_w(6), constructions.hub_tree(7), Graph.empty(2)]
        assert list(enumeration.filter_critical(graphs, theta_one, jobs=1)) == [graphs[0]]

    @pytest.mark.slow
    def test_process_pool_keeps_input_order(self, enumeration, theta_one):
        graphs = list(enum_connected(6))
        serial = list(enumeration.filter_critical(graphs, theta_one, jobs=1))
        parallel = list(enumeration.filter_critical(graphs, theta_one, jobs=2))
        assert parallel == serial


class TestNTheta:
    @pytest.mark.parametrize("theta, n_theta, catalogue", TEST_N_THETA)
    def test_small_values(self, enumeration, theta, n_theta, catalogue):
        result = enumeration.compute_n_theta(AlgebraicRoot.parse(theta), 6)
        assert result.found
        assert result.n_theta == n_theta
        assert set(codes(result.graphs)) == set(codes(catalogue))

    def test_theta_two_includes_h1(self, enumeration):
        result = enumeration.compute_n_theta(AlgebraicRoot.integer(2), 6)
        assert result.n_theta == 5
        assert canonical_code(constructions.graph_h1()) in codes(result.graphs)

    def test_not_found_within_bound(self, enumeration):
        result = enumeration.compute_n_theta(AlgebraicRoot.square_root(5), 3)
        assert not result.found
        assert result.graphs == []
        assert result.scanned == {1: 1, 2: 1, 3: 2}

    def test_result_is_cached_for_native_generation(self, enumeration, theta_one):
        first = enumeration.compute_n_theta(theta_one, 4)
        assert enumeration.compute_n_theta(theta_one, 4) is first

    def test_external_source(self, enumeration, theta_one):
        source = {2: [Graph.complete(2)], 1: [Graph.empty(1)]}
        result = enumeration.compute_n_theta(theta_one, 3, source=lambda n: source.get(n, []))
        assert result.n_theta == 2


class TestPagedEnumeration:
    def test_page_window(self):
        assert page_window(1, 4) == (0, 4)
        assert page_window(3, 4) == (8, 12)

    def test_page_is_cut_from_an_unbounded_stream(self):
        page = PaginatedResponse.from_stream(count(), page=3, page_size=4, total_items=100)
        assert page.items == [8, 9, 10, 11]
        assert page.pagination.total_pages == 25
        assert page.pagination.has_next is True
        assert page.pagination.has_previous is True

    def test_page_past_the_end_reads_nothing(self):
        def exhausted():
            raise AssertionError("stream should not be read")
            yield

        page = PaginatedResponse.from_stream(exhausted(), page=5, page_size=4, total_items=6)
        assert page.items == []
        assert page.pagination.total_pages == 2
        assert page.pagination.has_next is False

    def test_trees_are_paged_with_a_cached_total(self, engine, enumeration):
        manager = EnumerationManager(enumeration)
        first = manager._page(engine, schemas.GraphKind.TREES, 6, 1, 4, None)
        second = manager._page(engine, schemas.GraphKind.TREES, 6, 2, 4, None)
        assert len(first.items) == 4
        assert len(second.items) == 2
        assert second.pagination.total_items == 6
        assert manager._totals == {(schemas.GraphKind.TREES, 6, None): 6}
        paged = [g.canonical_graph6 for g in first.items + second.items]
        assert len(set(paged)) == 6

    def test_critical_filter_total(self, engine, enumeration):
        manager = EnumerationManager(enumeration)
        page = manager._page(engine, schemas.GraphKind.CONNECTED, 7, 4, 5, "x-1")
        assert page.pagination.total_items == TEST_CRITICAL_AT_SEVEN
        assert len(page.items) == 1
