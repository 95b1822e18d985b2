"""Real-root counting with Sturm sequences.

Sequences are built on the squarefree part with sign-preserving pseudo
remainders, each member reduced to its primitive part.
"""

from fractions import Fraction
from typing import Optional, Union

from app.polynomials.factorization import squarefree_decomposition, squarefree_part
from app.polynomials.polynomial import IntPolynomial
from exceptions import ArgumentError

Bound = Union[int, Fraction, None]


def sturm_sequence(poly: IntPolynomial) -> list[IntPolynomial]:
    if poly.is_zero():
        raise ArgumentError("the zero polynomial has no Sturm sequence")
    sequence = [poly, poly.derivative()]
    while not sequence[-1].is_zero() and not sequence[-1].is_constant():
        remainder = -sequence[-2].pseudo_remainder(sequence[-1])
        if remainder.is_zero():
            break
        content = remainder.content()
        sequence.append(IntPolynomial(c // content for c in remainder.coeffs))
    return [p for p in sequence if not p.is_zero()]


def _sign(value: Union[int, Fraction]) -> int:
    return (value > 0) - (value < 0)


def _sign_at(poly: IntPolynomial, point: Bound, direction: int) -> int:
    """Sign at a rational point, or at +inf/-inf when point is None."""
    if point is not None:
        return _sign(poly.evaluate(Fraction(point)))
    lead = _sign(poly.leading_coefficient)
    return lead if direction > 0 or int(poly.degree) % 2 == 0 else -lead


def sign_variations(sequence: list[IntPolynomial], point: Bound, direction: int = 1) -> int:
    signs = [s for s in (_sign_at(p, point, direction) for p in sequence) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(
    poly: IntPolynomial,
    interval: Optional[tuple[Bound, Bound]] = None,
) -> int:
    """Distinct real roots in the half-open interval (low, high].

    ``None`` endpoints stand for -inf and +inf; the default is the whole line.
    """
    if poly.is_zero():
        raise ArgumentError("the zero polynomial has infinitely many roots")
    if poly.is_constant():
        return 0
    low, high = interval if interval is not None else (None, None)
    if low is not None and high is not None and Fraction(low) >= Fraction(high):
        return 0
    sequence = sturm_sequence(squarefree_part(poly))
    return sign_variations(sequence, low, -1) - sign_variations(sequence, high, 1)


def count_real_roots_with_multiplicity(poly: IntPolynomial) -> int:
    if poly.is_zero():
        raise ArgumentError("the zero polynomial has infinitely many roots")
    return sum(
        multiplicity * count_real_roots(factor)
        for factor, multiplicity in squarefree_decomposition(poly)
    )


def is_real_rooted(poly: IntPolynomial) -> bool:
    return count_real_roots_with_multiplicity(poly) == int(poly.degree)


def root_bound(poly: IntPolynomial) -> Fraction:
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    lead = abs(poly.leading_coefficient)
    return 1 + max((Fraction(abs(c), lead) for c in poly.coeffs[:-1]), default=Fraction(0))


def largest_root_interval(poly: IntPolynomial) -> Optional[tuple[Fraction, Fraction]]:
    """Interval (low, high] holding the largest real root and no other root."""
    core = squarefree_part(poly)
    if core.is_constant() or count_real_roots(core) == 0:
        return None
    high = root_bound(core)
    low = -high
    while count_real_roots(core, (low, high)) > 1:
        middle = (low + high) / 2
        if count_real_roots(core, (middle, high)) >= 1:
            low = middle
        else:
            high = middle
    return low, high


def shrink_root_interval(
    poly: IntPolynomial,
    interval: tuple[Fraction, Fraction],
) -> tuple[Fraction, Fraction]:
    """Halve an isolating interval (low, high] of a root of poly."""
    core = squarefree_part(poly)
    low, high = interval
    middle = (low + high) / 2
    if count_real_roots(core, (middle, high)) >= 1:
        return middle, high
    return low, middle


def largest_root_multiplicity(poly: IntPolynomial) -> int:
    """Multiplicity of the largest real root (0 when there are no real roots)."""
    interval = largest_root_interval(poly)
    if interval is None:
        return 0
    for factor, multiplicity in squarefree_decomposition(poly):
        if count_real_roots(factor, interval):
            return multiplicity
    return 0
