"""API integration tests for the criticality domain."""

import pytest
from fastapi import status


def get_response_data(response_data: dict):
    return response_data.get("data", response_data)


class TestClassifyAPI:
    @pytest.mark.asyncio
    async def test_hub_tree_vertices(self, client):
        response = await client.post(
            "/criticality/classify",
            json={"graph": {"family": "hub", "n": 7}, "theta": "x-1"},
        )

        assert response.status_code == status.HTTP_200_OK
        data = get_response_data(response.json())
        assert data["multiplicity"] == 2
        assert data["critical"] is False
        hub = data["vertices"][0]
        assert hub == {"vertex": 0, "kind": "positive", "special": True, "delta": 1}
        assert {v["kind"] for v in data["vertices"][1:]} == {"essential"}

    @pytest.mark.asyncio
    async def test_theta_not_a_root(self, client):
        response = await client.post(
            "/criticality/classify", json={"graph": {"graph6": "Bw"}, "theta": "x-1"}
        )

        data = get_response_data(response.json())
        assert data["is_root"] is False
        assert data["multiplicity"] == 0

    @pytest.mark.asyncio
    async def test_bad_theta(self, client):
        response = await client.post(
            "/criticality/classify", json={"graph": {"graph6": "Bw"}, "theta": "2x-1"}
        )

        assert response.status_code in (status.HTTP_400_BAD_REQUEST, status.HTTP_422_UNPROCESSABLE_ENTITY)


class TestCriticalAPI:
    @pytest.mark.asyncio
    @pytest.mark.parametrize(
        "graph, theta, expected",
        [
            ({"graph6": "Bw"}, "x^2-3", True),
            ({"family": "H1"}, "x-2", True),
            ({"family": "W", "n": 6}, "x-1", True),
            ({"family": "hub", "n": 7}, "x-1", False),
        ],
    )
    async def test_decisions(self, client, graph, theta, expected):
        response = await client.post("/criticality/critical", json={"graph": graph, "theta": theta})

        assert response.status_code == status.HTTP_200_OK
        assert get_response_data(response.json())["critical"] is expected

    @pytest.mark.asyncio
    async def test_disconnected_graph(self, client):
        response = await client.post(
            "/criticality/critical", json={"graph": {"graph6": "A?"}, "theta": "x"}
        )

        assert response.status_code == status.HTTP_400_BAD_REQUEST
