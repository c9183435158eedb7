import pytest
from fastapi.testclient import TestClient

from app.application.fast_api import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestFlagHandler:
    def test_graph(self, client):
        response = client.post("/flag/graph", json={"shape": "1,2/3", "check": True})
        assert response.status_code == 200
        body = response.json()
        assert body["apiCode"] == "KO000"
        assert body["status"] is True
        assert body["data"]["shape"] == "F(1,2,3)"
        assert body["data"]["summary"]["transpose"] is True

    def test_polytope(self, client):
        response = client.post("/flag/polytope", json={"shape": "2/4", "check": True})
        assert response.status_code == 200
        summary = response.json()["data"]["summary"]
        assert summary["facets"] == 6
        assert summary["hull_agrees"] is True

    def test_series(self, client):
        response = client.post("/flag/series", json={"shape": "2/5", "max_degree": 2})
        assert response.status_code == 200
        series = response.json()["data"]["data"]["series"]
        assert [term["A"] for term in series] == ["1", "3", "19/32"]

    def test_complete_intersection_series(self, client):
        response = client.post("/flag/series", json={"shape": "2/4", "max_degree": 1, "degrees": "4"})
        assert response.status_code == 200
        body = response.json()["data"]
        assert body["command"] == "ci-series"
        assert [term["A"] for term in body["data"]["series"]] == ["1", "48"]

    def test_census(self, client):
        response = client.post("/flag/census", json={"n_max": 4, "check": True})
        assert response.status_code == 200
        assert response.json()["data"]["summary"]["shapes"] == 3

    @pytest.mark.parametrize("path, payload, code", [
        ("/flag/graph", {"shape": "2-5"}, "KOS02"),
        ("/flag/graph", {"shape": "3,2/5"}, "KOS01"),
        ("/flag/series", {"shape": "2/4", "max_degree": -1}, "KOS10"),
        ("/flag/series", {"shape": "1,2/3", "degrees": "2"}, "KOS03"),
        ("/flag/census", {"n_max": 1}, "KOS10"),
    ])
    def test_invalid_requests(self, client, path, payload, code):
        response = client.post(path, json=payload)
        assert response.status_code == 400
        body = response.json()
        assert body["apiCode"] == code
        assert body["status"] is False

    def test_missing_field(self, client):
        assert client.post("/flag/graph", json={}).status_code == 422
