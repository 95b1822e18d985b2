"""API integration tests for the families domain."""

import pytest
from fastapi import status

from app.families import constructions
from app.graphs.graph6 import write_graph6


def get_response_data(response_data: dict):
    return response_data.get("data", response_data)


class TestFamiliesAPI:
    @pytest.mark.asyncio
    async def test_list_families(self, client):
        response = await client.get("/families")

        assert response.status_code == status.HTTP_200_OK
        names = get_response_data(response.json())
        assert {"W", "Fstar", "hub", "H", "Q", "Gstar"} <= set(names)

    @pytest.mark.asyncio
    async def test_build_member(self, client):
        response = await client.post("/families/build", json={"name": "W", "n": 9})

        assert response.status_code == status.HTTP_200_OK
        data = get_response_data(response.json())
        assert data["graph"]["graph6"] == write_graph6(constructions.path_w(9))
        assert data["family"]["n"] == 9

    @pytest.mark.asyncio
    async def test_build_q_member(self, client):
        response = await client.post(
            "/families/build", json={"name": "Q", "params": {"theta": "x^2-3", "k": 2}}
        )

        assert response.status_code == status.HTTP_200_OK
        assert get_response_data(response.json())["graph"]["n"] == 11

    @pytest.mark.asyncio
    async def test_build_below_minimum_order(self, client):
        response = await client.post("/families/build", json={"name": "W", "n": 5})

        assert response.status_code == status.HTTP_400_BAD_REQUEST

    @pytest.mark.asyncio
    async def test_hub_members(self, client):
        response = await client.get("/families/hub/members", params={"n": 7})

        assert response.status_code == status.HTTP_200_OK
        data = get_response_data(response.json())
        assert data["family"] == "hub"
        assert data["count"] == 4
        assert len(data["members"]) == 4

    @pytest.mark.asyncio
    async def test_hub_members_order_out_of_range(self, client):
        response = await client.get("/families/hub/members", params={"n": 6})

        assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY

    @pytest.mark.asyncio
    async def test_h_members_match_hub_members_at_one(self, client):
        hub = await client.get("/families/hub/members", params={"n": 7})
        h = await client.get("/families/h/members", params={"theta": "x-1", "n": 7})

        assert h.status_code == status.HTTP_200_OK
        hub_codes = {g["canonical_graph6"] for g in get_response_data(hub.json())["members"]}
        h_codes = {g["canonical_graph6"] for g in get_response_data(h.json())["members"]}
        assert h_codes == hub_codes

    @pytest.mark.asyncio
    async def test_edge_addition_all_candidates(self, client):
        response = await client.post(
            "/families/edge-addition", json={"graph": {"family": "W", "n": 6}}
        )

        assert response.status_code == status.HTTP_200_OK
        data = get_response_data(response.json())
        assert [item["u"] for item in data] == [1, 2]
        assert all(item["graph"]["m"] == 6 for item in data)

    @pytest.mark.asyncio
    async def test_edge_addition_without_candidates(self, client):
        response = await client.post(
            "/families/edge-addition", json={"graph": {"graph6": "Bw"}}
        )

        assert response.status_code == status.HTTP_400_BAD_REQUEST
