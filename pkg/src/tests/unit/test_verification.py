"""
Unit tests for the claim registry, census plumbing and the registered claims.
"""

import pytest

from app.families import constructions
from app.graphs.graph import Graph
from app.matching.service import MatchingService
from app.polynomials.factorization import irreducible_factors
from app.verification import catalogue, properties
from app.verification.registry import CLAIMS, CensusReport, get_claim
from app.verification.service import VerificationService
from app.verification.tasks import run_claim
from exceptions import ArgumentError, UnknownClaimError


TEST_FAST_PROPERTY_CLAIMS = [
    "engine-oracle",
    "sign-symmetry",
    "multiplicativity",
    "real-roots",
    "largest-root",
    "interlacing",
    "gallai",
    "positive-exists",
    "neutral-deletion",
    "essential-exists",
    "path-tree",
]
TEST_SMALL_ORDER = 5


@pytest.fixture
def verification() -> VerificationService:
    """Service running claims with the process-wide toolkit."""
    return VerificationService()


@pytest.fixture
def mu_at_one():
    """mu(G, 1) through a private engine."""
    engine = MatchingService()
    return lambda graph: engine.matching_polynomial(graph).evaluate(1)


class TestRegistry:
    def test_claims_are_registered(self, verification):
        ids = [c.id for c in verification.list_claims()]
        assert ids == sorted(ids)
        for expected in ("max-multiplicity", "critical-census", "enum-counts", "closed-forms"):
            assert expected in ids

    def test_unknown_claim_lists_available_ids(self):
        with pytest.raises(UnknownClaimError) as exc:
            get_claim("no-such-claim")
        assert "closed-forms" in exc.value.available
        assert "no-such-claim" in str(exc.value)

    def test_unknown_parameter_is_rejected(self, verification):
        with pytest.raises(ArgumentError):
            verification.resolve_params(CLAIMS["enum-counts"], {"bogus": 1})

    def test_textual_parameters_are_coerced(self, verification):
        params = verification.resolve_params(CLAIMS["enum-counts"], {"n": "4"})
        assert params == {"n": 4, "tree_n": 10}

    def test_sweep_defaults(self):
        assert CLAIMS["engine-oracle"].defaults["samples"] > 0
        assert CLAIMS["engine-oracle"].defaults["random_order"] == 12
        assert CLAIMS["multiplicativity"].defaults["n"] == 7
        assert CLAIMS["neutral-deletion"].defaults["n"] == 7

    def test_non_integer_text_is_rejected(self, verification):
        with pytest.raises(ArgumentError):
            verification.resolve_params(CLAIMS["enum-counts"], {"n": "four"})

    def test_report_passes_without_violations(self):
        report = CensusReport(claim="x", params={})
        assert report.passed
        report.violations.append({"reason": "test"})
        assert not report.passed
        assert set(report.to_dict()) == {
            "claim", "params", "scanned", "witnesses", "violations", "elapsed_ms"
        }


class TestClosedForms:
    @pytest.mark.parametrize("n", range(3, 14))
    def test_y_family(self, mu_at_one, n):
        assert mu_at_one(constructions.path_y(n)) == catalogue.y_at_one(n)

    @pytest.mark.parametrize("n", range(6, 15))
    def test_w_family(self, mu_at_one, n):
        assert mu_at_one(constructions.path_w(n)) == catalogue.w_at_one(n)

    @pytest.mark.parametrize("m", [7, 10, 13])
    def test_w_star_family(self, mu_at_one, m):
        assert mu_at_one(constructions.path_w_star(m)) == catalogue.w_star_at_one(m)

    def test_w_star_has_no_form_off_residue(self):
        assert catalogue.w_star_at_one(8) is None

    @pytest.mark.parametrize("n", range(7, 15))
    def test_r_family(self, mu_at_one, n):
        assert mu_at_one(constructions.path_r(n)) == catalogue.r_at_one(n)

    def test_claim_passes(self, verification):
        report = verification.run("closed-forms", {"n_max": 15})
        assert report.passed, report.violations


class TestCensusClaims:
    def test_enum_counts(self, verification):
        report = verification.run("enum-counts", {"n": TEST_SMALL_ORDER, "tree_n": 7})
        assert report.passed, report.violations
        assert report.scanned == 31 + 25

    def test_sixteen_critical_graphs(self, verification):
        report = verification.run("critical-census", {"n": 7, "expected": 16})
        assert report.passed
        assert len(report.witnesses) == 16
        assert report.scanned == 853

    def test_wrong_expectation_is_a_violation(self, verification):
        report = verification.run("critical-census", {"n": 7, "expected": 15})
        assert not report.passed
        assert report.violations[0]["found"] == 16

    def test_known_count_is_the_default_expectation(self, verification):
        report = verification.run("critical-census", {})
        assert report.passed, report.violations
        assert report.params["expected"] == 16
        assert len(report.witnesses) == 16

    def test_unknown_class_has_no_default_expectation(self, verification):
        report = verification.run("critical-census", {"n": 5})
        assert report.passed
        assert report.params["expected"] is None

    def test_critical_census_rejects_unknown_kind(self, verification):
        with pytest.raises(ArgumentError):
            verification.run("critical-census", {"kind": "cubic"})

    def test_external_source_is_filtered_by_order(self, verification):
        source = [Graph.complete(2), Graph.path(3), Graph.empty(2), constructions.path_w(6)]
        report = verification.run("critical-census", {"n": 2, "expected": 1}, source=iter(source))
        assert report.passed
        assert report.scanned == 1

    def test_critical_families(self, verification):
        report = verification.run("critical-families", {"n_max": 12})
        assert report.passed, report.violations

    def test_positive_not_special(self, verification):
        report = verification.run("positive-not-special", {"theta": "x^2-3", "k": 2})
        assert report.passed, report.violations

    def test_edge_addition(self, verification):
        report = verification.run("edge-addition", {"n_max": 10})
        assert report.passed, report.violations


class TestBoundClaims:
    @pytest.mark.parametrize(
        "claim_id, params",
        [
            ("max-multiplicity", {"n": 7}),
            ("tree-bound", {"n": 8}),
            ("essential-bound", {"theta": "x-1", "n": 7}),
            ("order-bound", {"theta": "x-1", "n": 6}),
            ("critical-window", {"theta": "x-1", "n": 4}),
        ],
    )
    def test_bounds_hold(self, verification, claim_id, params):
        report = verification.run(claim_id, params)
        assert report.passed, report.violations

    def test_essential_bound_records_n_theta(self, verification):
        report = verification.run("essential-bound", {"theta": "x-1", "n": 7})
        assert report.params["n_theta"] == 2

    def test_critical_window_outside_range(self, verification):
        with pytest.raises(ArgumentError):
            verification.run("critical-window", {"theta": "x-1", "n": 5})

    @pytest.mark.slow
    def test_no_two_connected_at_nine(self, verification):
        report = verification.run("no-two-connected", {"n": 9})
        assert report.passed, report.violations


class TestPropertyClaims:
    @pytest.mark.parametrize("claim_id", TEST_FAST_PROPERTY_CLAIMS)
    def test_property_holds_on_small_orders(self, verification, claim_id):
        report = verification.run(claim_id, {"n": TEST_SMALL_ORDER})
        assert report.passed, report.violations
        assert report.scanned > 0

    @pytest.mark.slow
    def test_property_claims_in_a_process_pool(self, verification):
        report = verification.run("gallai", {"n": 6}, jobs=2)
        assert report.passed


class TestRootSweep:
    def test_uncertified_factor_of_p6_is_swept(self):
        thetas = properties._thetas(Graph.path(6), {"theta": "all"})
        assert [t.minpoly.to_text() for t in thetas] == ["x^6-5x^4+6x^2-1"]
        assert thetas[0].irreducibility_verified is False

    @pytest.mark.parametrize(
        "graph",
        [Graph.path(6), Graph.path(8), Graph.cycle(6), constructions.hub_tree(7), constructions.graph_g_star()],
    )
    def test_one_root_per_factor(self, graph):
        mu = MatchingService().matching_polynomial(graph)
        thetas = properties._thetas(graph, {})
        assert [t.minpoly for t in thetas] == [f.poly for f in irreducible_factors(mu)]

    def test_fixed_root_is_used_alone(self):
        thetas = properties._thetas(Graph.path(6), {"theta": "x-1"})
        assert [t.to_text() for t in thetas] == ["x-1"]

    def test_interlacing_with_a_fixed_root(self, verification):
        report = verification.run("interlacing", {"n": TEST_SMALL_ORDER, "theta": "x^2-3"})
        assert report.passed, report.violations


class TestCeleryTask:
    def test_task_runs_eagerly(self):
        result = run_claim.apply(args=["enum-counts"], kwargs={"params": {"n": 3, "tree_n": 4}}).get()
        assert result["passed"] is True
        assert result["claim"] == "enum-counts"
