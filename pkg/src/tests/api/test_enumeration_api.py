"""API integration tests for the enumeration domain."""

import pytest
from fastapi import status


def get_response_data(response_data: dict):
    return response_data.get("data", response_data)


class TestEnumerateAPI:
    @pytest.mark.asyncio
    async def test_trees_paginated(self, client):
        response = await client.get("/enumeration/trees", params={"n": 6, "page": 1, "page_size": 4})

        assert response.status_code == status.HTTP_200_OK
        body = response.json()
        assert len(body["data"]) == 4
        assert body["pagination"] == {
            "page": 1,
            "page_size": 4,
            "total_items": 6,
            "total_pages": 2,
            "has_next": True,
            "has_previous": False,
        }

    @pytest.mark.asyncio
    async def test_last_page(self, client):
        response = await client.get("/enumeration/trees", params={"n": 6, "page": 2, "page_size": 4})

        body = response.json()
        assert len(body["data"]) == 2
        assert body["pagination"]["has_next"] is False
        assert all(g["m"] == 5 for g in body["data"])

    @pytest.mark.asyncio
    async def test_connected_with_critical_filter(self, client):
        response = await client.get(
            "/enumeration/connected", params={"n": 7, "page_size": 100, "filter_critical": "x-1"}
        )

        assert response.status_code == status.HTTP_200_OK
        assert response.json()["pagination"]["total_items"] == 16

    @pytest.mark.asyncio
    async def test_unknown_kind(self, client):
        response = await client.get("/enumeration/cubic", params={"n": 4})

        assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY

    @pytest.mark.asyncio
    async def test_order_above_request_limit(self, client):
        response = await client.get("/enumeration/connected", params={"n": 9})

        assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY


class TestNThetaAPI:
    @pytest.mark.asyncio
    @pytest.mark.parametrize(
        "theta, n_theta",
        [("x-1", 2), ("x^2-2", 3), ("x^2-3", 3), ("x", 1)],
    )
    async def test_small_values(self, client, theta, n_theta):
        response = await client.post("/enumeration/n-theta", json={"theta": theta})

        assert response.status_code == status.HTTP_200_OK
        data = get_response_data(response.json())
        assert data["found"] is True
        assert data["n_theta"] == n_theta
        assert all(g["n"] == n_theta for g in data["graphs"])

    @pytest.mark.asyncio
    async def test_not_found_within_bound(self, client):
        response = await client.post("/enumeration/n-theta", json={"theta": "x^2-5", "n_max": 3})

        assert response.status_code == status.HTTP_200_OK
        data = get_response_data(response.json())
        assert data["found"] is False
        assert data["n_theta"] is None
        assert data["scanned"] == {"1": 1, "2": 1, "3": 2}
