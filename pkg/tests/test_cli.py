"""Tests for the command-line interface (in-process and thin-client modes)."""

from __future__ import annotations

import json
import socket
import subprocess
import sys
import time

import pytest

from gpgraph.cli import EXIT_DISAGREEMENT, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, main


def run_cli(capsys, *argv: str) -> tuple[int, str, str]:
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestClassify:
    def test_plain_output(self, capsys):
        rc, out, _ = run_cli(capsys, "classify", "5", "2")
        assert rc == EXIT_OK
        assert out == (
            "G(5,2)\n"
            "  bipartite:            no\n"
            "  core:                 yes\n"
            "  vertex-transitive:    yes\n"
            "  group-graph:          no\n"
            "  2gen-monoid-graph:    yes\n"
            "  loopless-obstruction: yes\n"
            "  aut-order-expected:   (exceptional)\n"
            "  aut-order-found:      120\n"
        )

    def test_json_output(self, capsys):
        rc, out, _ = run_cli(capsys, "classify", "8", "3", "--format", "json")
        assert rc == EXIT_OK
        body = json.loads(out)
        assert body["bipartite"] is True
        assert body["group_graph"] is True
        assert body["aut_order_found"] == 96

    def test_not_computed_marker(self, capsys):
        rc, out, _ = run_cli(capsys, "classify", "20", "3")
        assert rc == EXIT_OK
        assert "aut-order-found:      (not computed)" in out

    def test_brute_aut_flag(self, capsys):
        rc, out, _ = run_cli(capsys, "classify", "13", "2", "--brute-aut")
        assert rc == EXIT_OK
        assert "aut-order-found:      26" in out

    def test_domain_error(self, capsys):
        rc, _, err = run_cli(capsys, "classify", "4", "2")
        assert rc == EXIT_USAGE
        assert "error" in err

    def test_non_integer_argument(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["classify", "five", "2"])
        assert exc.value.code == EXIT_USAGE

    def test_missing_argument(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["classify", "5"])
        assert exc.value.code == EXIT_USAGE


class TestVerify:
    def test_all_checks_pass(self, capsys):
        rc, out, _ = run_cli(capsys, "verify", "--nmax", "5")
        assert rc == EXIT_OK
        assert "result: OK" in out
        assert "check core:" in out and "check endo:" in out and "check aut:" in out

    def test_check_selection_and_counts(self, capsys):
        rc, out, _ = run_cli(capsys, "verify", "--nmax", "5", "--checks", "core")
        assert rc == EXIT_OK
        assert out == (
            "check core: n<=5 instances=3 agreements=3 disagreements=0 inconclusive=0\n"
            "result: OK\n"
        )

    def test_json_format(self, capsys):
        rc, out, _ = run_cli(capsys, "verify", "--nmax", "5", "--checks", "endo", "--format", "json")
        assert rc == EXIT_OK
        body = json.loads(out)
        assert body["ok"] is True

    def test_unknown_check(self, capsys):
        rc, _, err = run_cli(capsys, "verify", "--nmax", "5", "--checks", "spectral")
        assert rc == EXIT_USAGE
        assert "error" in err

    def test_budget_exhaustion_exits_3(self, capsys, monkeypatch):
        monkeypatch.setenv("GP_ORACLE_BUDGET", "3")
        rc, out, _ = run_cli(capsys, "verify", "--nmax", "6", "--checks", "core")
        assert rc == EXIT_INCONCLUSIVE
        assert "INCONCLUSIVE" in out
        assert "result: FAILED" in out


class TestRetract:
    def test_json_output(self, capsys):
        rc, out, _ = run_cli(capsys, "retract", "15", "3")
        assert rc == EXIT_OK
        body = json.loads(out)
        assert body["target"] == [15, 18, 21, 24, 27]
        assert body["images"][0] == 18

    def test_dot_output(self, capsys):
        rc, out, _ = run_cli(capsys, "retract", "15", "3", "--format", "dot")
        assert rc == EXIT_OK
        assert out.startswith("graph ")
        assert 'label="u0 -> v3"' in out

    def test_core_instance_fails(self, capsys):
        rc, _, err = run_cli(capsys, "retract", "5", "2")
        assert rc == EXIT_USAGE
        assert "core" in err


class TestCayley:
    def test_json_output(self, capsys):
        rc, out, _ = run_cli(capsys, "cayley", "cay1", "10", "4")
        assert rc == EXIT_OK
        body = json.loads(out)
        assert body["order"] == 20
        assert body["connection"] == [1, 12]

    def test_dot_output(self, capsys):
        rc, out, _ = run_cli(capsys, "cayley", "petersen-m", "--format", "dot")
        assert rc == EXIT_OK
        assert out.startswith("digraph ")

    def test_unknown_construction(self, capsys):
        rc, _, err = run_cli(capsys, "cayley", "nope")
        assert rc == EXIT_USAGE
        assert "error" in err

    def test_missing_parameters(self, capsys):
        rc, _, err = run_cli(capsys, "cayley", "cay1")
        assert rc == EXIT_USAGE


class TestTableAndCheckTable:
    def test_table_json(self, capsys):
        rc, out, _ = run_cli(capsys, "table", "petersen-m")
        assert rc == EXIT_OK
        body = json.loads(out)
        assert body["order"] == 10
        assert body["connection"] == [1, 6]

    def test_unknown_table(self, capsys):
        rc, _, err = run_cli(capsys, "table", "nope")
        assert rc == EXIT_USAGE

    def test_check_table_round_trip(self, capsys, tmp_path):
        rc, out, _ = run_cli(capsys, "table", "petersen-m")
        assert rc == EXIT_OK
        path = tmp_path / "table.json"
        path.write_text(out)
        rc, out, _ = run_cli(capsys, "check-table", str(path), "--target", "5", "2")
        assert rc == EXIT_OK
        body = json.loads(out)
        assert body["matches_target"] is True

    def test_check_table_mismatch_exits_2(self, capsys, tmp_path):
        rc, out, _ = run_cli(capsys, "table", "petersen-m")
        path = tmp_path / "table.json"
        path.write_text(out)
        rc, out, _ = run_cli(capsys, "check-table", str(path), "--target", "7", "2")
        assert rc == EXIT_DISAGREEMENT
        body = json.loads(out)
        assert body["matches_target"] is False

    def test_check_table_connection_override(self, capsys, tmp_path):
        rc, out, _ = run_cli(capsys, "table", "desargues")
        path = tmp_path / "table.json"
        path.write_text(out)
        rc, out, _ = run_cli(capsys, "check-table", str(path), "--connection", "3,12")
        assert rc == EXIT_OK
        assert json.loads(out)["generates"] is False

    def test_check_table_missing_file(self, capsys, tmp_path):
        rc, _, err = run_cli(capsys, "check-table", str(tmp_path / "absent.json"))
        assert rc == EXIT_USAGE
        assert "error" in err

    def test_check_table_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        rc, _, err = run_cli(capsys, "check-table", str(path))
        assert rc == EXIT_USAGE


class TestScan:
    def test_stdout(self, capsys):
        rc, out, _ = run_cli(capsys, "scan", "--nmax", "5")
        assert rc == EXIT_OK
        lines = out.splitlines()
        assert lines[1].startswith("n,k,")
        assert len(lines) == 2 + 4  # pairs with 3 <= n <= 5

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "plane.csv"
        rc, out, _ = run_cli(capsys, "scan", "--nmax", "5", "--out", str(path))
        assert rc == EXIT_OK
        assert path.read_text().splitlines()[1].startswith("n,k,")


@pytest.fixture(scope="module")
def server_url():
    port = _free_port()
    proc = subprocess.Popen(
        [sys.executable, "-m", "gpgraph.cli", "serve", "--port", str(port)],
        stdout=subprocess.DEVNULL,
        stderr=subprocess.DEVNULL,
    )
    url = f"http://127.0.0.1:{port}"
    try:
        _wait_for_health(url)
        yield url
    finally:
        proc.terminate()
        proc.wait(timeout=10)


class TestThinClient:
    def test_classify_over_http(self, capsys, server_url):
        rc, out, _ = run_cli(capsys, "--url", server_url, "classify", "5", "2", "--format", "json")
        assert rc == EXIT_OK
        assert json.loads(out)["core"] is True

    def test_domain_error_maps_to_exit_1(self, capsys, server_url):
        rc, _, err = run_cli(capsys, "--url", server_url, "retract", "5", "2")
        assert rc == EXIT_USAGE
        assert "core" in err

    def test_unreachable_server(self, capsys):
        rc, _, err = run_cli(capsys, "--url", "http://127.0.0.1:9", "classify", "5", "2")
        assert rc == EXIT_USAGE
        assert "error" in err


def _free_port() -> int:
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        return s.getsockname()[1]


def _wait_for_health(url: str, timeout: float = 20.0) -> None:
    import httpx

    deadline = time.time() + timeout
    while time.time() < deadline:
        try:
            if httpx.get(f"{url}/health", timeout=1.0).status_code == 200:
                return
        except httpx.HTTPError:
            time.sleep(0.2)
    raise RuntimeError("service did not come up in time")
