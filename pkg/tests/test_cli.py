import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from threshdist.cli import run

GOLDEN = Path(__file__).parent / "golden"


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(autouse=True)
def _plain_env(monkeypatch):
    monkeypatch.delenv("THRESHDIST_FORMAT", raising=False)


@pytest.mark.parametrize(
    "golden, argv",
    [
        ("charpoly_fig1_all.json", ["charpoly", "0^3 1^2 0^2 1", "--method", "all", "--format", "json"]),
        ("charpoly_fig1.txt", ["charpoly", "0^3 1^2 0^2 1"]),
        ("multiplicities_fig1.txt", ["multiplicities", "0^3 1^2 0^2 1"]),
        ("gamma_3412.json", ["gamma", "0^3 1^4 0 1^2", "--format", "json"]),
        ("verify_fig1.json", ["verify", "00011001", "--format", "json"]),
        ("family_t2_112.txt", ["family", "--theorem2", "1", "1", "2"]),
        ("family_t2_112.json", ["family", "--theorem2", "1", "1", "2", "--format", "json"]),
        ("search_13.jsonl", ["search", "--max-vertices", "13", "--parallelism", "1"]),
    ],
)
def test_golden(golden, argv):
    code, out, _ = invoke(*argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_charpoly_all_agree():
    code, out, _ = invoke("charpoly", "0^3 1^2 0^2 1", "--method", "all", "--format", "json")
    results = json.loads(out)
    assert [r["method"] for r in results] == ["formula", "quotient", "oracle"]
    assert len({tuple(r["full_coeffs"]) for r in results}) == 1


def test_multiplicities_text():
    assert invoke("multiplicities", "0^3 1^2 0^2 1")[1] == "m(-2) = 3, m(-1) = 1\n"


def test_family_text():
    code, out, _ = invoke("family", "--theorem2", "1", "1", "2")
    assert "(0^3 1^4 0^1 1^2)" in out and "(0^2 1^2 0^2 1^4)" in out
    assert "verified: true" in out


def test_family_corollary_rejection_is_usage_error():
    code, out, err = invoke("family", "--corollary1", "2", "2", "2", "2")
    assert code == 2 and "vertex counts differ" in err


def test_family_corollary_ok():
    code, out, _ = invoke("family", "--corollary1", "4", "2", "1", "2", "--format", "json")
    assert code == 0 and json.loads(out)["verified"] is True


def test_family_survey_json():
    code, out, _ = invoke("family", "--survey", "3")
    assert code == 0 and json.loads(out)["odd_cospectral_anywhere"] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["charpoly", "1^2"],
        ["charpoly", "010"],
        ["charpoly", "0^3 1", "--method", "nope"],
        ["family"],
        ["family", "--theorem2", "0", "1", "2"],
        ["verify"],
        ["gamma", "1,x"],
        [],
    ],
)
def test_usage_errors_exit_2(argv):
    assert invoke(*argv)[0] == 2


def test_verify_exhaustive():
    code, out, _ = invoke("verify", "--exhaustive", "8", "--parallelism", "1")
    assert code == 0 and out.endswith("127/127 graphs pass\n")
    code, out, _ = invoke("verify", "--exhaustive", "6", "--parallelism", "1", "--format", "json")
    assert json.loads(out) == {"max_vertices": 6, "graphs": 31, "failures": []}


def test_gamma_signed_list():
    code, out, _ = invoke("gamma", "3,4,1,2", "--negate")
    assert "gamma[4,1] = -6" in out and "gamma[4,4] = 24" in out


def test_env_default_format(monkeypatch):
    monkeypatch.setenv("THRESHDIST_FORMAT", "json")
    code, out, _ = invoke("multiplicities", "01")
    assert json.loads(out) == {"blocks": [1, 1], "m2": 0, "m1": 1}


def test_search_stream_shape():
    code, out, _ = invoke("search", "--max-vertices", "10", "--parallelism", "1")
    lines = [json.loads(l) for l in out.splitlines()]
    assert lines[0]["g"] == [2, 2, 2, 4] and lines[0]["h"] == [3, 4, 1, 2]
    assert lines[-1]["summary"]["total_pairs"] == 1


def test_deterministic():
    argv = ["search", "--max-vertices", "11", "--parallelism", "1"]
    assert invoke(*argv)[1] == invoke(*argv)[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "threshdist", "multiplicities", "0^3 1^2 0^2 1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "m(-2) = 3, m(-1) = 1\n"
