import io
import json
import subprocess
import sys

import pytest

from patterncount.cli import EXIT_BUDGET, EXIT_INVALID, EXIT_OK, EXIT_VERIFY, main
from patterncount.verify import Check, SuiteResult


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_count_triangle():
    code, out, _ = run("count", "--graph", "K3", "--pattern", "R0", "--colors", "3")
    assert code == EXIT_OK
    assert json.loads(out)["count"] == "21"


def test_count_turan_csv():
    code, out, _ = run("count", "--graph", "turan:4:3", "--pattern", "MONO3", "--colors", "2", "--format", "csv")
    assert code == EXIT_OK
    assert out.splitlines() == ["graph,pattern_code,r,count", "C],03000000,2,16"]


def test_count_bad_graph_file():
    code, _, err = run("count", "--graph", "bad.g6", "--pattern", "R0", "--colors", "3")
    assert code == EXIT_INVALID and "invalid input" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("count", "--graph", "K3", "--pattern", "NOPE", "--colors", "3"),
        ("count", "--graph", "K3", "--pattern", "R0", "--colors", "0"),
        ("count", "--graph", "K3", "--pattern", "R0"),
        ("count", "--graph", "K3", "--pattern", "R0", "--colors", "3", "--max-nodes", "-1"),
        ("count", "--graph", "K3", "--pattern", "R0", "--colors", "3", "--edge-order", "zigzag"),
        ("frobnicate",),
        (),
    ],
)
def test_invalid_input_exit_code(argv):
    assert run(*argv)[0] == EXIT_INVALID


def test_count_budget_exit_code():
    code, _, err = run("count", "--graph", "K6", "--pattern", "R0", "--colors", "3", "--max-nodes", "10")
    assert code == EXIT_BUDGET and "budget" in err


def test_threads_and_orders_agree():
    base = json.loads(run("count", "--graph", "K5", "--pattern", "R0", "--colors", "3")[1])["count"]
    for extra in (("--threads", "2"), ("--edge-order", "random:3"), ("--edge-order", "lex", "--threads", "2")):
        assert json.loads(run("count", "--graph", "K5", "--pattern", "R0", "--colors", "3", *extra)[1])["count"] == base


def test_threads_from_environment(monkeypatch):
    monkeypatch.setenv("PATTERNCOUNT_THREADS", "2")
    assert json.loads(run("count", "--graph", "K5", "--pattern", "R0", "--colors", "3")[1])["count"] == "6129"


def test_count_with_cache(tmp_path):
    argv = ("count", "--graph", "K4", "--pattern", "R0", "--colors", "3", "--cache-dir", str(tmp_path))
    first = json.loads(run(*argv)[1])
    second = json.loads(run(*argv)[1])
    assert first["count"] == second["count"] == "279"
    assert second.get("cached") is True


def test_search_multipartite():
    code, out, _ = run("search", "--n", "5", "--pattern", "R0", "--colors", "3", "--mode", "multipartite")
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["argmax_parts"] == [[1, 1, 1, 1, 1]] and rep["best_count"] == "6129"


def test_search_all_graphs():
    code, out, _ = run("search", "--n", "4", "--pattern", "T0", "--colors", "3", "--mode", "all-graphs")
    assert code == EXIT_OK
    assert json.loads(out)["best_count"] == "81"


def test_search_is_deterministic(tmp_path):
    argv = ("search", "--n", "4", "--pattern", "T0", "--colors", "3", "--mode", "all-graphs", "--cache-dir", str(tmp_path))
    assert run(*argv)[1] == run(*argv)[1]


def test_search_budget():
    assert run("search", "--n", "9", "--mode", "all-graphs")[0] == EXIT_BUDGET


def test_verify_suites():
    code, out, _ = run("verify", "holder")
    assert code == EXIT_OK and json.loads(out)["ok"]
    code, out, _ = run("verify", "weight")
    data = json.loads(out)
    assert code == EXIT_OK
    assert any(c["status"] == "info" for c in data["checks"])
    assert run("verify", "nosuch")[0] == EXIT_INVALID


def test_verify_failure_exit_code(monkeypatch):
    def broken():
        res = SuiteResult("ramsey")
        res.checks.append(Check("forced", "fail"))
        return res

    monkeypatch.setitem(__import__("patterncount.verify", fromlist=["SUITES"]).SUITES, "ramsey", broken)
    assert run("verify", "ramsey")[0] == EXIT_VERIFY


def test_catalog():
    code, out, _ = run("catalog")
    names = [json.loads(line)["name"] for line in out.splitlines()]
    assert code == EXIT_OK
    assert {"T0", "R0", "P1", "P2", "P3"} <= set(names)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "patterncount", "count", "--graph", "K4", "--pattern", "MONO3", "--colors", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == "18"
