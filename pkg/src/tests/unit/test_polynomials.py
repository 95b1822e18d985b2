"""
Unit tests for integer polynomials, factorisation, Sturm counting and algebraic roots.
"""

from fractions import Fraction

import pytest
import sympy

from app.polynomials.algebraic import AlgebraicRoot
from app.polynomials.factorization import (
    integer_roots,
    irreducible_factors,
    is_irreducible,
    is_squarefree,
    quadratic_split,
    squarefree_decomposition,
    squarefree_part,
)
from app.polynomials.polynomial import (
    ONE,
    X,
    IntPolynomial,
    divide_exact,
    factor_multiplicity,
    gcd,
)
from app.polynomials.sturm import (
    count_real_roots,
    count_real_roots_with_multiplicity,
    is_real_rooted,
    largest_root_interval,
    largest_root_multiplicity,
    shrink_root_interval,
)
from exceptions import ArgumentError, NotDivisibleError, PolynomialFormatError


TEST_MU_W6 = "x^6-5x^4+4x^2"
TEST_MU_F_STAR_11 = "x^11-10x^9+27x^7-18x^5"
TEST_DOUBLE_ONE = IntPolynomial.from_roots([1, 1, -1])


def p(text: str) -> IntPolynomial:
    return IntPolynomial.parse(text)


def sympy_poly(poly: IntPolynomial) -> sympy.Poly:
    x = sympy.Symbol("x")
    return sympy.Poly(list(reversed(poly.coeffs)), x)


class TestIntPolynomial:
    def test_parse_and_print(self):
        poly = p(TEST_MU_W6)
        assert poly.coeffs == (0, 0, 4, 0, -5, 0, 1)
        assert poly.to_text() == TEST_MU_W6

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("-2x+3", (3, -2)),
            ("2*x^3", (0, 0, 0, 2)),
            ("x - x", ()),
            (" x^2 - 1 ", (-1, 0, 1)),
            ("7", (7,)),
        ],
    )
    def test_parse_variants(self, text, expected):
        assert p(text).coeffs == expected

    @pytest.mark.parametrize("text", ["", "x^2+", "1.5x", "x/2", "xx", "x^"])
    def test_parse_rejects_malformed_text(self, text):
        with pytest.raises(PolynomialFormatError):
            p(text)

    def test_zero_polynomial_prints_as_zero(self):
        assert IntPolynomial().to_text() == "0"
        assert IntPolynomial().is_zero()

    def test_arithmetic(self):
        assert (p("x-1") * p("x+1")) == p("x^2-1")
        assert p("x^2") + p("-x^2+1") == ONE
        assert p("x+1") ** 3 == p("x^3+3x^2+3x+1")
        assert X.shift(2) == p("x^3")
        assert 3 * p("x+1") == p("3x+3")

    def test_reflect_and_parity(self):
        mu = p(TEST_MU_W6)
        assert mu.is_even()
        assert mu.reflect() == mu
        assert p("x^3-2x").reflect() == p("-x^3+2x")
        assert p("x^3-2x").is_odd()

    def test_strip_x_and_valuation(self):
        mu = p(TEST_MU_F_STAR_11)
        assert mu.x_valuation() == 5
        assert mu.strip_x() == p("x^6-10x^4+27x^2-18")

    def test_evaluate_is_exact(self):
        assert p(TEST_MU_W6).evaluate(1) == 0
        assert p("x^2-2").evaluate(Fraction(3, 2)) == Fraction(1, 4)

    def test_divide_exact(self):
        assert divide_exact(p("x^2-1"), p("x-1")) == p("x+1")
        with pytest.raises(NotDivisibleError):
            divide_exact(p("x^2+1"), p("x-1"))
        with pytest.raises(ArgumentError):
            divide_exact(p("x^2-1"), p("2x-2"))

    def test_factor_multiplicity(self):
        assert factor_multiplicity(TEST_DOUBLE_ONE, p("x-1")) == 2
        assert factor_multiplicity(TEST_DOUBLE_ONE, p("x+1")) == 1
        assert factor_multiplicity(TEST_DOUBLE_ONE, p("x-2")) == 0
        with pytest.raises(ArgumentError):
            factor_multiplicity(IntPolynomial(), p("x-1"))

    def test_gcd(self):
        assert gcd(TEST_DOUBLE_ONE, p("x^2+x-2")) == p("x-1")
        assert gcd(p("x^2+1"), p("x-1")).is_constant()


class TestFactorization:
    def test_squarefree_decomposition(self):
        assert squarefree_decomposition(TEST_DOUBLE_ONE) == [(p("x+1"), 1), (p("x-1"), 2)]

    def test_squarefree_part_and_check(self):
        assert squarefree_part(TEST_DOUBLE_ONE) == p("x^2-1")
        assert not is_squarefree(TEST_DOUBLE_ONE)
        assert is_squarefree(p("x^2-2"))

    def test_integer_roots(self):
        assert integer_roots(p(TEST_MU_W6)) == [-2, -1, 0, 1, 2]
        assert integer_roots(p("x^2-2")) == []

    def test_quadratic_split(self):
        split = quadratic_split(p("x^4-5x^2+6"))
        assert split in (p("x^2-2"), p("x^2-3"))
        assert quadratic_split(p("x^4+1")) is None

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("x-5", True),
            ("x^2-2", True),
            ("x^2-4", False),
            ("x^3-2", True),
            ("x^4+1", True),
            ("x^4-5x^2+6", False),
            ("x^5-2", None),
        ],
    )
    def test_is_irreducible(self, text, expected):
        assert is_irreducible(p(text)) is expected

    def test_matching_polynomial_of_w6_splits_into_linear_factors(self):
        factors = {(f.poly.to_text(), f.multiplicity) for f in irreducible_factors(p(TEST_MU_W6))}
        assert factors == {("x", 2), ("x-1", 1), ("x+1", 1), ("x-2", 1), ("x+2", 1)}

    def test_factors_multiply_back(self):
        poly = p(TEST_MU_F_STAR_11)
        product = ONE
        for factor in irreducible_factors(poly):
            product = product * factor.poly ** factor.multiplicity
        assert product == poly

    def test_verified_factors_are_irreducible_per_sympy(self):
        for text in (TEST_MU_W6, TEST_MU_F_STAR_11, "x^8-7x^6+13x^4-4x^2", "x^4-4x^2+2"):
            for factor in irreducible_factors(p(text)):
                if factor.verified:
                    assert sympy_poly(factor.poly).is_irreducible

    def test_non_monic_input_is_rejected(self):
        with pytest.raises(ArgumentError):
            irreducible_factors(p("2x^2-1"))


class TestSturm:
    def test_counts_on_whole_line(self):
        assert count_real_roots(p("x^2-2")) == 2
        assert count_real_roots(p("x^2+1")) == 0
        assert count_real_roots(TEST_DOUBLE_ONE) == 2

    def test_counts_on_half_open_interval(self):
        assert count_real_roots(p("x^2-2"), (0, 2)) == 1
        assert count_real_roots(p("x-1"), (0, 1)) == 1
        assert count_real_roots(p("x-1"), (1, 2)) == 0

    def test_counts_with_multiplicity(self):
        assert count_real_roots_with_multiplicity(TEST_DOUBLE_ONE) == 3
        assert is_real_rooted(p(TEST_MU_F_STAR_11))
        assert not is_real_rooted(p("x^3+x"))

    def test_largest_root_interval_isolates_sqrt2(self):
        low, high = largest_root_interval(p("x^3-2x"))
        assert low < 2 ** 0.5 <= high
        assert count_real_roots(p("x^3-2x"), (low, high)) == 1
        low2, high2 = shrink_root_interval(p("x^3-2x"), (low, high))
        assert high2 - low2 == (high - low) / 2
        assert low2 < 2 ** 0.5 <= high2

    def test_largest_root_multiplicity(self):
        assert largest_root_multiplicity(TEST_DOUBLE_ONE) == 2
        assert largest_root_multiplicity(p("x^2+1")) == 0
        assert largest_root_interval(p("x^2+1")) is None


class TestAlgebraicRoot:
    def test_integer_and_square_root(self):
        assert AlgebraicRoot.integer(1).to_text() == "x-1"
        assert AlgebraicRoot.square_root(3).to_text() == "x^2-3"
        assert AlgebraicRoot.integer(-1).is_unit_pair()
        assert AlgebraicRoot.parse("x").is_zero()

    @pytest.mark.parametrize("text", ["x^2-4", "2x-1", "x^2-2x+1", "5"])
    def test_invalid_minimal_polynomials(self, text):
        with pytest.raises(ArgumentError):
            AlgebraicRoot.parse(text)

    def test_negated(self):
        assert AlgebraicRoot.integer(1).negated().to_text() == "x+1"
        assert AlgebraicRoot.square_root(2).negated().to_text() == "x^2-2"
        assert AlgebraicRoot.parse("x^3-2").negated().to_text() == "x^3+2"

    def test_high_degree_is_accepted_unverified(self):
        root = AlgebraicRoot.parse("x^5-2")
        assert root.degree == 5
        assert root.irreducibility_verified is False
