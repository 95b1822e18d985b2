"""API integration tests for the health endpoints."""

import pytest
from fastapi import status


class TestHealthAPI:
    @pytest.mark.asyncio
    async def test_health(self, client):
        response = await client.get("/health")

        assert response.status_code == status.HTTP_200_OK
        data = response.json()["data"]
        assert data["status"] == "ok"
        assert data["memo_entries"] >= 0

    @pytest.mark.asyncio
    async def test_metrics_are_not_wrapped(self, client):
        response = await client.get("/metrics")

        assert response.status_code == status.HTTP_200_OK
        assert "data" not in response.text[:10]
