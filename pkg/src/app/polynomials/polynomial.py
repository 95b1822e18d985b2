import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

from exceptions import ArgumentError, NotDivisibleError, PolynomialFormatError

Scalar = Union[int, Fraction]

_TERM = re.compile(r"([+-]?)(\d*)(\*?x(?:\^(\d+))?)?")


class IntPolynomial:
    """Dense integer polynomial; ``coeffs[i]`` is the coefficient of x^i.

    Stored in normal form (no trailing zero coefficients); the zero
    polynomial has an empty coefficient tuple and degree ``-inf``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        values = [int(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs = tuple(values)

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "IntPolynomial":
        if degree < 0:
            raise ArgumentError(f"monomial degree must be non-negative, got {degree}")
        return cls((0,) * degree + (c,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Sequence[int]) -> "IntPolynomial":
        result = cls.constant(1)
        for r in roots:
            result = result * cls((-r, 1))
        return result

    # Basic queries

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> Union[int, float]:
        return len(self._coeffs) - 1 if self._coeffs else -math.inf

    @property
    def leading_coefficient(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_monic(self) -> bool:
        return self.leading_coefficient == 1

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def coefficient(self, i: int) -> int:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else 0

    def content(self) -> int:
        return math.gcd(*self._coeffs) if self._coeffs else 0

    def primitive_part(self) -> "IntPolynomial":
        """Content removed, positive leading coefficient."""
        if not self._coeffs:
            return self
        g = self.content()
        if self.leading_coefficient < 0:
            g = -g
        return IntPolynomial(c // g for c in self._coeffs)

    def x_valuation(self) -> int:
        """Largest r with x^r dividing self."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return 0

    def strip_x(self) -> "IntPolynomial":
        return IntPolynomial(self._coeffs[self.x_valuation():])

    def reflect(self) -> "IntPolynomial":
        """P(-x)."""
        return IntPolynomial(c if i % 2 == 0 else -c for i, c in enumerate(self._coeffs))

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self._coeffs) if i)

    def is_even(self) -> bool:
        return all(c == 0 for c in self._coeffs[1::2])

    def is_odd(self) -> bool:
        return all(c == 0 for c in self._coeffs[0::2])

    def substitute_square(self) -> "IntPolynomial":
        """P(x^2)."""
        spread = [0] * (2 * len(self._coeffs) - 1) if self._coeffs else []
        for i, c in enumerate(self._coeffs):
            spread[2 * i] = c
        return IntPolynomial(spread)

    def evaluate(self, a: Scalar) -> Scalar:
        """Exact Horner evaluation at an integer or rational point."""
        value: Scalar = 0
        for c in reversed(self._coeffs):
            value = value * a + c
        return value

    # Arithmetic

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self._coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self._coeffs)
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ArgumentError("negative powers are not polynomials")
        result = IntPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by x^k."""
        if not self._coeffs:
            return self
        return IntPolynomial((0,) * k + self._coeffs)

    def divmod_monic(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Quotient and remainder by a monic divisor; stays over the integers."""
        if divisor.is_zero() or not divisor.is_monic():
            raise ArgumentError(f"divisor {divisor} must be monic")
        d = len(divisor._coeffs) - 1
        remainder = list(self._coeffs)
        if len(remainder) <= d:
            return IntPolynomial(), self
        quotient = [0] * (len(remainder) - d)
        for k in range(len(remainder) - 1, d - 1, -1):
            c = remainder[k]
            if c:
                quotient[k - d] = c
                for i, b in enumerate(divisor._coeffs):
                    remainder[k - d + i] -= c * b
        return IntPolynomial(quotient), IntPolynomial(remainder[:d])

    def pseudo_remainder(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Remainder of |lc(divisor)|^(deg self - deg divisor + 1) * self by divisor."""
        if divisor.is_zero():
            raise ArgumentError("pseudo-division by zero")
        d = len(divisor._coeffs) - 1
        lc = divisor.leading_coefficient
        scale = abs(lc)
        sign = 1 if lc > 0 else -1
        remainder = list(self._coeffs)
        steps = len(remainder) - d
        if steps <= 0:
            return self
        for k in range(len(remainder) - 1, d - 1, -1):
            c = remainder[k]
            remainder = [r * scale for r in remainder]
            if c:
                factor = c * sign
                for i, b in enumerate(divisor._coeffs):
                    remainder[k - d + i] -= factor * b
        return IntPolynomial(remainder[:d])

    # Comparison, hashing, text

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._coeffs == IntPolynomial.constant(other)._coeffs
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def sort_key(self) -> tuple:
        """Order by degree, then coefficients from the top down."""
        return (len(self._coeffs), tuple(reversed(self._coeffs)))

    def to_text(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if i == 0:
                body = str(magnitude)
            else:
                power = "x" if i == 1 else f"x^{i}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f"{sign}{body}"
        return text

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Parse sparse signed terms such as ``x^6-5x^4+4x^2`` or ``-2x+3``."""
        source = "".join(text.split())
        if not source:
            raise PolynomialFormatError("empty polynomial text")
        if "." in source or "/" in source:
            raise PolynomialFormatError(f"only integer coefficients are accepted: {text!r}")
        coeffs: dict[int, int] = {}
        position = 0
        while position < len(source):
            match = _TERM.match(source, position)
            if not match or match.end() == position:
                raise PolynomialFormatError(f"cannot parse {text!r} at position {position}")
            sign, digits, variable, exponent = match.groups()
            if position > 0 and not sign:
                raise PolynomialFormatError(f"missing operator in {text!r} at position {position}")
            if not digits and not variable:
                raise PolynomialFormatError(f"dangling sign in {text!r} at position {position}")
            c = int(digits) if digits else 1
            if sign == "-":
                c = -c
            degree = (int(exponent) if exponent else 1) if variable else 0
            coeffs[degree] = coeffs.get(degree, 0) + c
            position = match.end()
        top = max(coeffs)
        return cls(coeffs.get(i, 0) for i in range(top + 1))

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"IntPolynomial({self.to_text()!r})"


def divide_exact(dividend: IntPolynomial, divisor: IntPolynomial) -> IntPolynomial:
    """R with dividend = divisor * R; raises NotDivisibleError otherwise."""
    if divisor.is_constant() or not divisor.is_monic():
        raise ArgumentError(f"divisor {divisor} must be monic of degree at least 1")
    quotient, remainder = dividend.divmod_monic(divisor)
    if not remainder.is_zero():
        raise NotDivisibleError(f"{divisor} does not divide {dividend}")
    return quotient


def factor_multiplicity(poly: IntPolynomial, factor: IntPolynomial) -> int:
    """Largest k with factor^k dividing poly."""
    if poly.is_zero():
        raise ArgumentError("multiplicity in the zero polynomial is undefined")
    if factor.is_constant() or not factor.is_monic():
        raise ArgumentError(f"factor {factor} must be monic of degree at least 1")
    k = 0
    while True:
        quotient, remainder = poly.divmod_monic(factor)
        if not remainder.is_zero():
            return k
        poly = quotient
        k += 1


def gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over the integers with positive leading coefficient."""
    a, b = a.primitive_part(), b.primitive_part()
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if b.degree > a.degree:
        a, b = b, a
    while not b.is_zero():
        a, b = b, a.pseudo_remainder(b).primitive_part()
    return a.primitive_part()


ONE = IntPolynomial.constant(1)
X = IntPolynomial.x()
