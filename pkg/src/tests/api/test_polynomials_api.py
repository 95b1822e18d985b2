"""API integration tests for the polynomials domain."""

from unittest.mock import patch

import pytest
from fastapi import status

from config import settings


TEST_W6 = {"family": "W", "n": 6}
TEST_K4_G6 = "C~"


def get_response_data(response_data: dict):
    return response_data.get("data", response_data)


class TestMatchingPolynomialAPI:
    @pytest.mark.asyncio
    async def test_family_member(self, client):
        response = await client.post("/polynomials/matching", json=TEST_W6)

        assert response.status_code == status.HTTP_200_OK
        data = get_response_data(response.json())
        assert data["polynomial"] == "x^6-5x^4+4x^2"
        assert data["coefficients"] == [0, 0, 4, 0, -5, 0, 1]
        assert data["graph"]["n"] == 6
        assert data["graph"]["connected"] is True

    @pytest.mark.asyncio
    async def test_graph6_member(self, client):
        response = await client.post("/polynomials/matching", json={"graph6": TEST_K4_G6})

        assert response.status_code == status.HTTP_200_OK
        data = get_response_data(response.json())
        assert data["matching_counts"] == [1, 6, 3]

    @pytest.mark.asyncio
    async def test_response_is_wrapped(self, client):
        response = await client.post("/polynomials/matching", json={"graph6": "A_"})

        assert set(response.json()) == {"data"}

    @pytest.mark.asyncio
    async def test_malformed_graph6(self, client):
        response = await client.post("/polynomials/matching", json={"graph6": "C~~"})

        assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY
        assert "byte offset" in response.json()["detail"]

    @pytest.mark.asyncio
    async def test_two_sources_fail_validation(self, client):
        response = await client.post("/polynomials/matching", json={"graph6": "A_", **TEST_W6})

        assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY

    @pytest.mark.asyncio
    async def test_unknown_family(self, client):
        response = await client.post("/polynomials/matching", json={"family": "nope", "n": 3})

        assert response.status_code == status.HTTP_400_BAD_REQUEST
        assert "known families" in response.json()["detail"]


class TestFactorAPI:
    @pytest.mark.asyncio
    async def test_factor_splits_into_linear_factors(self, client):
        response = await client.post("/polynomials/factor", json={"polynomial": "x^5-5x^3+4x"})

        assert response.status_code == status.HTTP_200_OK
        data = get_response_data(response.json())
        assert {f["factor"] for f in data["factors"]} == {"x", "x-1", "x+1", "x-2", "x+2"}
        assert all(f["multiplicity"] == 1 and f["verified"] for f in data["factors"])
        assert data["real_roots"] == 5
        assert data["real_rooted"] is True

    @pytest.mark.asyncio
    async def test_bad_polynomial_text(self, client):
        response = await client.post("/polynomials/factor", json={"polynomial": "x^^2"})

        assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY

    @pytest.mark.asyncio
    async def test_zero_polynomial(self, client):
        response = await client.post("/polynomials/factor", json={"polynomial": "0"})

        assert response.status_code == status.HTTP_400_BAD_REQUEST


class TestMaxMultiplicityAPI:
    @pytest.mark.asyncio
    async def test_hub_tree(self, client):
        response = await client.post("/polynomials/max-multiplicity", json={"family": "hub", "n": 7})

        assert response.status_code == status.HTTP_200_OK
        data = get_response_data(response.json())
        assert data["multiplicity"] == 2
        assert data["factor"] == "x^2-1"

    @pytest.mark.asyncio
    async def test_single_vertex_has_no_nonzero_root(self, client):
        response = await client.post("/polynomials/max-multiplicity", json={"graph6": "@"})

        data = get_response_data(response.json())
        assert data["multiplicity"] == 0
        assert data["factor"] is None


class TestPathTreeAPI:
    @pytest.mark.asyncio
    async def test_triangle(self, client):
        response = await client.post("/polynomials/path-tree", json={"graph": {"graph6": "Bw"}, "u": 0})

        assert response.status_code == status.HTTP_200_OK
        data = get_response_data(response.json())
        assert data == {"tree_order": 5, "divisible": True, "quotient": "x^2-1", "quotient_identity": True}

    @pytest.mark.asyncio
    async def test_vertex_out_of_range(self, client):
        response = await client.post("/polynomials/path-tree", json={"graph": {"graph6": "Bw"}, "u": 7})

        assert response.status_code == status.HTTP_400_BAD_REQUEST

    @pytest.mark.asyncio
    async def test_node_limit(self, client):
        with patch.object(settings, "path_tree_node_limit", 3):
            response = await client.post("/polynomials/path-tree", json={"graph": {"graph6": TEST_K4_G6}})

        assert response.status_code == status.HTTP_413_REQUEST_ENTITY_TOO_LARGE
        assert response.json()["detail"]["limit"] == 3
