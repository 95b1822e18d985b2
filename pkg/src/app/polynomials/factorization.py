"""Squarefree decomposition and the small-degree factor search.

Factor search is confined to what the censuses need: integer roots,
quartic splitting into integer quadratics, and lifting factors of
q(y) back through y = x^2 for polynomials of the form x^r q(x^2).
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from app.polynomials.polynomial import X, IntPolynomial, gcd
from exceptions import ArgumentError

_Rational = list[Fraction]


def _trim(v: _Rational) -> _Rational:
    while v and v[-1] == 0:
        v.pop()
    return v


def _rational(p: IntPolynomial) -> _Rational:
    return [Fraction(c) for c in p.coeffs]


def _rdivmod(a: _Rational, b: _Rational) -> tuple[_Rational, _Rational]:
    remainder = list(a)
    d = len(b) - 1
    if len(remainder) <= d:
        return [], remainder
    quotient = [Fraction(0)] * (len(remainder) - d)
    lead = b[-1]
    for k in range(len(remainder) - 1, d - 1, -1):
        c = remainder[k] / lead
        if c:
            quotient[k - d] = c
            for i, coefficient in enumerate(b):
                remainder[k - d + i] -= c * coefficient
    return _trim(quotient), _trim(remainder[:d])


def _rmonic_gcd(a: _Rational, b: _Rational) -> _Rational:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _rdivmod(a, b)[1]
    lead = a[-1]
    return [c / lead for c in a]


def _rderivative(a: _Rational) -> _Rational:
    return _trim([i * c for i, c in enumerate(a) if i])


def _rsub(a: _Rational, b: _Rational) -> _Rational:
    size = max(len(a), len(b))
    return _trim([
        (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(size)
    ])


def _integral(a: _Rational) -> IntPolynomial:
    scale = math.lcm(*(c.denominator for c in a)) if a else 1
    return IntPolynomial(int(c * scale) for c in a).primitive_part()


def squarefree_decomposition(poly: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun decomposition: primitive, pairwise coprime squarefree factors.

    ``poly == content * prod(f ** k)`` with multiplicities strictly increasing;
    constant factors are omitted.
    """
    if poly.is_zero():
        raise ArgumentError("the zero polynomial has no squarefree decomposition")
    f = _rational(poly)
    if len(f) <= 1:
        return []
    derivative = _rderivative(f)
    g = _rmonic_gcd(f, derivative)
    b = _rdivmod(f, g)[0]
    c = _rdivmod(derivative, g)[0]
    d = _rsub(c, _rderivative(b))
    result = []
    multiplicity = 1
    while len(b) > 1:
        a = _rmonic_gcd(b, d)
        if len(a) > 1:
            result.append((_integral(a), multiplicity))
        b = _rdivmod(b, a)[0]
        c = _rdivmod(d, a)[0]
        d = _rsub(c, _rderivative(b))
        multiplicity += 1
    return result


def squarefree_part(poly: IntPolynomial) -> IntPolynomial:
    """Primitive product of the distinct irreducible factors."""
    if poly.is_zero():
        raise ArgumentError("the zero polynomial has no squarefree part")
    f = _rational(poly)
    return _integral(_rdivmod(f, _rmonic_gcd(f, _rderivative(f)))[0])


def is_squarefree(poly: IntPolynomial) -> bool:
    return gcd(poly, poly.derivative()).is_constant()


def _divisors(value: int) -> list[int]:
    value = abs(value)
    small, large = [], []
    for d in range(1, math.isqrt(value) + 1):
        if value % d == 0:
            small.append(d)
            if d * d != value:
                large.append(value // d)
    return small + large[::-1]


def integer_roots(poly: IntPolynomial) -> list[int]:
    """Distinct integer roots of a monic polynomial, ascending."""
    if not poly.is_monic():
        raise ArgumentError(f"integer root search needs a monic polynomial, got {poly}")
    roots = [0] if poly.x_valuation() else []
    rest = poly.strip_x()
    if rest.is_constant():
        return roots
    for d in _divisors(rest.coefficient(0)):
        for candidate in (d, -d):
            if rest.evaluate(candidate) == 0:
                roots.append(candidate)
    return sorted(roots)


def quadratic_split(poly: IntPolynomial) -> Optional[IntPolynomial]:
    """A monic integer quadratic dividing a monic quartic, if one exists."""
    if poly.degree != 4 or not poly.is_monic():
        raise ArgumentError(f"quadratic splitting needs a monic quartic, got {poly}")
    a0, a1, a2, a3 = (poly.coefficient(i) for i in range(4))
    if a0 == 0:
        raise ArgumentError(f"{poly} has the root 0; extract linear factors first")
    for magnitude in _divisors(a0):
        for b in (magnitude, -magnitude):
            d = a0 // b
            if d != b:
                numerator = a1 - b * a3
                if numerator % (d - b):
                    continue
                candidates = [numerator // (d - b)]
            else:
                if a1 != b * a3:
                    continue
                discriminant = a3 * a3 - 4 * (a2 - 2 * b)
                if discriminant < 0 or math.isqrt(discriminant) ** 2 != discriminant:
                    continue
                s = math.isqrt(discriminant)
                candidates = [(a3 + s) // 2, (a3 - s) // 2] if (a3 + s) % 2 == 0 else []
            for a in candidates:
                c = a3 - a
                if a * c + b + d == a2 and a * d + b * c == a1:
                    return IntPolynomial((b, a, 1))
    return None


def is_irreducible(poly: IntPolynomial) -> Optional[bool]:
    """Exact answer for monic degree <= 4; None when the degree is higher."""
    degree = poly.degree
    if degree < 1:
        return False
    if degree == 1:
        return True
    if degree > 4:
        return None
    if integer_roots(poly):
        return False
    if degree == 4:
        return quadratic_split(poly) is None
    return True


def _split_squarefree(poly: IntPolynomial) -> list[tuple[IntPolynomial, bool]]:
    """Irreducible factors of a monic squarefree polynomial, flagged when unverified."""
    pieces = []
    rest = poly
    for root in integer_roots(poly):
        linear = IntPolynomial((-root, 1))
        pieces.append((linear, True))
        rest = rest.divmod_monic(linear)[0]
    if rest.degree == 4:
        quadratic = quadratic_split(rest)
        if quadratic is not None:
            pieces.append((quadratic, True))
            pieces.append((rest.divmod_monic(quadratic)[0], True))
            return pieces
    if rest.degree >= 1:
        pieces.append((rest, rest.degree <= 4))
    return pieces


def _lift_square(factor: IntPolynomial, verified: bool) -> list[tuple[IntPolynomial, bool]]:
    """Factors of factor(x^2) for an irreducible factor(y) with nonzero roots."""
    lifted = factor.substitute_square()
    if factor.degree == 1 and verified:
        c = -factor.coefficient(0)
        if c > 0 and math.isqrt(c) ** 2 == c:
            a = math.isqrt(c)
            return [(IntPolynomial((-a, 1)), True), (IntPolynomial((a, 1)), True)]
        return [(lifted, True)]
    if factor.degree == 2 and verified:
        b, c = factor.coefficient(1), factor.coefficient(0)
        if c > 0 and math.isqrt(c) ** 2 == c:
            root_c = math.isqrt(c)
            for delta in (root_c, -root_c):
                alpha_squared = 2 * delta - b
                if alpha_squared > 0 and math.isqrt(alpha_squared) ** 2 == alpha_squared:
                    alpha = math.isqrt(alpha_squared)
                    return [
                        (IntPolynomial((delta, -alpha, 1)), True),
                        (IntPolynomial((delta, alpha, 1)), True),
                    ]
        return [(lifted, True)]
    return [(lifted, False)]


@dataclass(frozen=True)
class Factor:
    poly: IntPolynomial
    multiplicity: int
    verified: bool = True


def irreducible_factors(poly: IntPolynomial) -> list[Factor]:
    """Irreducible factors of a monic polynomial with multiplicities.

    Factors whose irreducibility could not be certified carry
    ``verified=False``; for x^r q(x^2) these are h(x^2) with deg h >= 3,
    whose multiplicity still equals that of each of its irreducible parts.
    """
    if not poly.is_monic():
        raise ArgumentError(f"factorisation needs a monic polynomial, got {poly}")
    factors: list[Factor] = []
    valuation = poly.x_valuation()
    if valuation:
        factors.append(Factor(X, valuation))
    rest = poly.strip_x()
    if rest.is_constant():
        return factors
    if rest.is_even():
        reduced = IntPolynomial(rest.coeffs[0::2])
        for part, multiplicity in squarefree_decomposition(reduced):
            for irreducible, verified in _split_squarefree(part):
                for lifted, ok in _lift_square(irreducible, verified):
                    factors.append(Factor(lifted, multiplicity, ok))
    else:
        for part, multiplicity in squarefree_decomposition(rest):
            for irreducible, verified in _split_squarefree(part):
                factors.append(Factor(irreducible, multiplicity, verified))
    return sorted(factors, key=lambda f: f.poly.sort_key())
