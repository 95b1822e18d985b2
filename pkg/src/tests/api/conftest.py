"""Test configuration for API tests against the in-process ASGI app."""

import sys
from pathlib import Path
from unittest.mock import MagicMock, patch

import pytest
from httpx import ASGITransport, AsyncClient

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from main import app


@pytest.fixture(scope="function")
async def client():
    async with AsyncClient(transport=ASGITransport(app=app), base_url="http://test") as ac:
        yield ac


@pytest.fixture(scope="session", autouse=True)
def mock_loggers():
    """Mock logger factory globally for tests."""
    mock_log = MagicMock()
    with patch("logger.get_logger", return_value=mock_log):
        yield


@pytest.fixture
def mock_run_claim():
    """Celery publishing replaced by a result handle with a fixed id."""
    with patch("app.verification.manager.run_claim") as task:
        task.apply_async.return_value = MagicMock(id="job-123")
        yield task


@pytest.fixture
def mock_async_result():
    """AsyncResult lookups answered without a result backend."""
    with patch("app.verification.manager.AsyncResult") as result_cls:
        yield result_cls
