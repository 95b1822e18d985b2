"""
Shared fixtures for the unit suites.

Each test gets a fresh engine so memo statistics never leak between tests.
"""

import pytest

from app.criticality.service import CriticalityService
from app.enumeration.service import EnumerationService
from app.families.service import FamiliesService
from app.matching.service import MatchingService
from app.polynomials.algebraic import AlgebraicRoot


@pytest.fixture
def engine() -> MatchingService:
    """Unbounded matching engine with an empty memo."""
    return MatchingService()


@pytest.fixture
def criticality(engine) -> CriticalityService:
    """Criticality service over the test engine."""
    return CriticalityService(engine)


@pytest.fixture
def enumeration(criticality) -> EnumerationService:
    """Enumeration service with its own n_theta cache."""
    return EnumerationService(criticality)


@pytest.fixture
def families(criticality, enumeration) -> FamiliesService:
    """Families service wired to the test engine."""
    return FamiliesService(criticality, enumeration)


@pytest.fixture
def theta_one() -> AlgebraicRoot:
    return AlgebraicRoot.integer(1)
