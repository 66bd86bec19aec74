"""Tests for the HTTP service endpoints."""

from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from gpgraph import __version__
from gpgraph.service import create_app


@pytest.fixture(scope="module")
def client() -> TestClient:
    return TestClient(create_app())


class TestHealth:
    def test_ok(self, client):
        resp = client.get("/health")
        assert resp.status_code == 200
        body = resp.json()
        assert body["status"] == "ok"
        assert body["version"] == __version__


class TestClassify:
    def test_petersen_row(self, client):
        resp = client.post("/classify", json={"n": 5, "k": 2})
        assert resp.status_code == 200
        assert resp.json() == {
            "n": 5,
            "k": 2,
            "bipartite": False,
            "core": True,
            "vertex_transitive": True,
            "group_graph": False,
            "two_gen_monoid_graph": True,
            "loopless_obstruction": True,
            "aut_order_expected": None,
            "aut_order_found": 120,
        }

    def test_bipartite_group_row(self, client):
        body = client.post("/classify", json={"n": 8, "k": 3}).json()
        assert body["bipartite"] is True
        assert body["core"] is False
        assert body["group_graph"] is True
        assert body["aut_order_found"] == 96

    def test_large_instance_skips_brute_force(self, client):
        body = client.post("/classify", json={"n": 20, "k": 3}).json()
        assert body["aut_order_expected"] == 40
        assert body["aut_order_found"] is None

    def test_brute_aut_flag_forces_search(self, client):
        body = client.post("/classify", json={"n": 13, "k": 2, "brute_aut": True}).json()
        assert body["aut_order_found"] == 26
        assert body["aut_order_expected"] == 26

    def test_domain_error_is_400(self, client):
        resp = client.post("/classify", json={"n": 4, "k": 2})
        assert resp.status_code == 400
        assert "detail" in resp.json()

    def test_validation_error_is_422(self, client):
        assert client.post("/classify", json={"n": 5}).status_code == 422
        assert client.post("/classify", json={"n": 2, "k": 1}).status_code == 422


class TestVerify:
    def test_all_checks_agree_on_small_range(self, client):
        resp = client.post("/verify", json={"n_max": 6})
        assert resp.status_code == 200
        body = resp.json()
        assert body["ok"] is True
        assert [r["check"] for r in body["results"]] == ["core", "endo", "aut"]
        for r in body["results"]:
            assert r["n_max_effective"] == 6
            assert r["instances"] == r["agreements"] > 0
            assert r["disagreements"] == []
            assert r["inconclusive"] == []
        core = body["results"][0]
        assert core["instances"] == 4  # non-bipartite pairs with n <= 6

    def test_single_check_selection(self, client):
        body = client.post("/verify", json={"n_max": 8, "checks": ["endo"]}).json()
        assert [r["check"] for r in body["results"]] == ["endo"]

    def test_requested_range_is_clamped(self, client):
        body = client.post("/verify", json={"n_max": 40, "checks": ["aut"]}).json()
        r = body["results"][0]
        assert r["n_max_requested"] == 40
        assert r["n_max_effective"] == 12

    def test_unknown_check_rejected(self, client):
        resp = client.post("/verify", json={"n_max": 6, "checks": ["spectral"]})
        assert resp.status_code == 422

    def test_tiny_budget_reports_inconclusive(self, client, monkeypatch):
        monkeypatch.setenv("GP_ORACLE_BUDGET", "3")
        body = client.post("/verify", json={"n_max": 6, "checks": ["core"]}).json()
        assert body["ok"] is False
        r = body["results"][0]
        assert r["inconclusive"], "expected budget-limited instances"
        assert r["disagreements"] == []
        assert "exhausted" in r["inconclusive"][0]["detail"]


class TestRetract:
    def test_json_payload(self, client):
        resp = client.post("/retract", json={"n": 15, "k": 3})
        assert resp.status_code == 200
        body = resp.json()
        assert (body["n"], body["k"], body["d"], body["a"]) == (15, 3, 3, 1)
        assert body["target"] == [15, 18, 21, 24, 27]
        assert body["images"][0] == 18
        assert len(body["images"]) == 30
        assert body["dot"] is None

    def test_dot_payload(self, client):
        body = client.post("/retract", json={"n": 15, "k": 3, "format": "dot"}).json()
        assert body["dot"].startswith("graph ")
        assert 'label="u0 -> v3"' in body["dot"]

    def test_core_instance_is_400(self, client):
        resp = client.post("/retract", json={"n": 5, "k": 2})
        assert resp.status_code == 400
        assert "core" in resp.json()["detail"]

    def test_bipartite_instance_is_400(self, client):
        assert client.post("/retract", json={"n": 8, "k": 3}).status_code == 400


class TestCayley:
    def test_fixed_construction(self, client):
        resp = client.post("/cayley", json={"construction": "petersen-s"})
        assert resp.status_code == 200
        body = resp.json()
        assert body["construction"] == "petersen-s"
        assert body["order"] == 10
        assert body["connection"] == [1, 6]
        assert len(body["arcs"]) == 20
        assert body["census"]["num_edges"] == 15

    def test_parametrized_construction(self, client):
        body = client.post("/cayley", json={"construction": "cay1", "n": 10, "k": 4}).json()
        assert body["order"] == 20
        assert body["connection"] == [1, 12]
        assert body["census"]["parallel_digons"] == 10

    def test_dot_format(self, client):
        body = client.post(
            "/cayley", json={"construction": "petersen-m", "format": "dot"}
        ).json()
        assert body["dot"].startswith("digraph ")

    def test_unknown_construction_is_400(self, client):
        resp = client.post("/cayley", json={"construction": "nope"})
        assert resp.status_code == 400

    def test_missing_parameters_is_400(self, client):
        assert client.post("/cayley", json={"construction": "cay1"}).status_code == 400

    def test_incompatible_parameters_is_400(self, client):
        assert (
            client.post("/cayley", json={"construction": "cay1", "n": 7, "k": 2}).status_code
            == 400
        )


class TestTable:
    def test_fetch_builtin(self, client):
        resp = client.post("/table", json={"name": "petersen-m"})
        assert resp.status_code == 200
        body = resp.json()
        assert body["order"] == 10
        assert body["connection"] == [1, 6]
        assert len(body["table"]) == 10
        assert all(len(row) == 10 for row in body["table"])
        assert body["labels"][0] == "0"

    def test_unknown_name_is_400(self, client):
        assert client.post("/table", json={"name": "nope"}).status_code == 400


class TestCheckTable:
    def test_round_trip_against_target(self, client):
        table = client.post("/table", json={"name": "petersen-m"}).json()
        resp = client.post("/check-table", json={"table": table, "target": [5, 2]})
        assert resp.status_code == 200
        body = resp.json()
        assert body["order"] == 10
        assert body["algebra"]["associative"] is True
        assert body["algebra"]["identity"] == 0
        assert body["generates"] is True
        assert body["matches_target"] is True
        assert body["iso_witness"] is not None
        assert len(body["iso_witness"]) == 10

    def test_mismatched_target(self, client):
        table = client.post("/table", json={"name": "petersen-m"}).json()
        body = client.post("/check-table", json={"table": table, "target": [7, 2]}).json()
        assert body["matches_target"] is False
        assert body["iso_witness"] is None

    def test_no_target(self, client):
        table = client.post("/table", json={"name": "desargues"}).json()
        body = client.post("/check-table", json={"table": table}).json()
        assert body["matches_target"] is None
        assert body["generates"] is False

    def test_connection_override(self, client):
        table = client.post("/table", json={"name": "petersen-m"}).json()
        body = client.post(
            "/check-table", json={"table": table, "connection": [1, 2, 6]}
        ).json()
        assert body["connection"] == [1, 2, 6]

    def test_invalid_connection_is_400(self, client):
        table = client.post("/table", json={"name": "petersen-m"}).json()
        resp = client.post("/check-table", json={"table": table, "connection": [99]})
        assert resp.status_code == 400


class TestScan:
    def test_csv_shape(self, client):
        resp = client.post("/scan", json={"n_max": 6})
        assert resp.status_code == 200
        lines = resp.json()["csv"].splitlines()
        assert lines[0].startswith("#")
        assert lines[1] == (
            "n,k,bipartite,core,vertex_transitive,group_graph,"
            "two_gen_monoid_graph,loopless_obstruction,"
            "aut_order_expected,aut_order_found"
        )
        assert len(lines) == 2 + 6  # pairs with 3 <= n <= 6
        # the triangular prism: not bipartite, retracts onto a triangle
        assert lines[2] == "3,1,false,false,true,true,true,false,12,12"

    def test_range_cap_is_validated(self, client):
        assert client.post("/scan", json={"n_max": 65}).status_code == 422
