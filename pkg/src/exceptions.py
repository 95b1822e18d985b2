"""Domain error hierarchy shared by the library, the HTTP service and the CLI."""

from typing import Iterable, Optional


class MatchcritError(Exception):
    """Base class for every error raised on purpose by this package."""


class ArgumentError(MatchcritError, ValueError):
    """A precondition of an operation does not hold."""


class GraphFormatError(MatchcritError, ValueError):
    """Malformed graph6 input."""

    def __init__(self, message: str, offset: int, line: Optional[str] = None) -> None:
        self.offset = offset
        self.line = line
        super().__init__(f"{message} (byte offset {offset})")


class PolynomialFormatError(ArgumentError):
    """Polynomial text that does not follow the term grammar."""


class NotDivisibleError(MatchcritError, ArithmeticError):
    """Exact division left a nonzero remainder."""


class SizeLimitError(MatchcritError):
    """An input exceeds a configured size guard."""

    def __init__(self, message: str, limit: int) -> None:
        self.limit = limit
        super().__init__(message)


class UnknownClaimError(MatchcritError, KeyError):
    """A verification claim id that is not registered."""

    def __init__(self, claim: str, available: Iterable[str]) -> None:
        self.claim = claim
        self.available = sorted(available)
        super().__init__(claim)

    def __str__(self) -> str:
        return f"unknown claim '{self.claim}'; available: {', '.join(self.available)}"
