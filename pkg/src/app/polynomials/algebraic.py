from dataclasses import dataclass

from app.polynomials.factorization import is_irreducible, is_squarefree
from app.polynomials.polynomial import IntPolynomial
from exceptions import ArgumentError


@dataclass(frozen=True)
class AlgebraicRoot:
    """An algebraic integer theta, carried by its monic minimal polynomial.

    Every root of ``minpoly`` behaves identically in the divisibility
    counts, so theta and its conjugates share one instance.
    """

    minpoly: IntPolynomial
    irreducibility_verified: bool

    @classmethod
    def from_minpoly(cls, minpoly: IntPolynomial) -> "AlgebraicRoot":
        if minpoly.degree < 1:
            raise ArgumentError("a minimal polynomial has degree at least 1")
        if not minpoly.is_monic():
            raise ArgumentError(f"minimal polynomial {minpoly} must be monic with integer coefficients")
        if not is_squarefree(minpoly):
            raise ArgumentError(f"minimal polynomial {minpoly} is not squarefree")
        irreducible = is_irreducible(minpoly)
        if irreducible is False:
            raise ArgumentError(f"minimal polynomial {minpoly} is reducible")
        return cls(minpoly=minpoly, irreducibility_verified=irreducible is True)

    @classmethod
    def parse(cls, text: str) -> "AlgebraicRoot":
        return cls.from_minpoly(IntPolynomial.parse(text))

    @classmethod
    def integer(cls, k: int) -> "AlgebraicRoot":
        return cls.from_minpoly(IntPolynomial((-k, 1)))

    @classmethod
    def square_root(cls, k: int) -> "AlgebraicRoot":
        """sqrt(k) for a positive non-square k."""
        return cls.from_minpoly(IntPolynomial((-k, 0, 1)))

    @property
    def degree(self) -> int:
        return int(self.minpoly.degree)

    def negated(self) -> "AlgebraicRoot":
        """The root -theta, minimal polynomial (-1)^d p(-x)."""
        reflected = self.minpoly.reflect()
        if reflected.leading_coefficient < 0:
            reflected = -reflected
        return AlgebraicRoot(minpoly=reflected, irreducibility_verified=self.irreducibility_verified)

    def is_zero(self) -> bool:
        return self.minpoly == IntPolynomial.x()

    def is_unit_pair(self) -> bool:
        """theta in {1, -1}."""
        return self.degree == 1 and abs(self.minpoly.coefficient(0)) == 1

    def to_text(self) -> str:
        return self.minpoly.to_text()

    def __str__(self) -> str:
        return self.to_text()
