import io
import json
import pathlib
import subprocess
import sys

import pytest

from cyclopoint.cli import run

GOLDEN = sorted((pathlib.Path(__file__).parent / "golden").glob("*.json"))


def call(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def doc(argv):
    code, out, err = call(argv)
    assert code == 0, err
    d = json.loads(out)
    assert d["schema"] == 1
    return d["result"]


def test_cyclo_part_example():
    r = doc(["cyclo-part", "x^2-1"])
    assert r["part"] == "(x-1)*(x+1)"
    assert r["roots"] == [{"order": 1, "exp": 0}, {"order": 2, "exp": 1}]


@pytest.mark.parametrize("method", ["enumerate", "graeffe", "checked"])
def test_cyclo_part_methods(method):
    r = doc(["cyclo-part", "(x^2-x-1)*(x^4+x^3+x^2+x+1)", "--method", method])
    assert r["indices"] == [5]


def test_ratio_defective_example():
    r = doc(["ratio", "defective", "5", "2", "1"])
    assert r["defective"] is True and r["k"] == 11


def test_ratio_degree_and_minpoly():
    assert doc(["ratio", "degree", "7", "2", "1"])["degree"] == 3
    assert doc(["ratio", "minpoly", "5", "2", "1"])["pretty"] == "t^2 - t - 1"


def test_metallic_test_and_table():
    r = doc(["metallic", "test", "5", "2", "1"])
    assert r["metallic"] is True and r["y0"]["y0"] == "1"
    assert doc(["metallic", "test", "7", "2", "1"])["metallic"] is False
    rows = doc(["metallic", "table"])
    assert len(rows) == 10


def test_solvers():
    fams = doc(["solve-family", "n*x-1"])
    assert [f["n"] for f in fams] == [{"num": "-1", "den": "1"}, {"num": "1", "den": "1"}]
    fams = doc(["solve-curve", "x+y-2"])
    assert fams[0]["coords"] == [{"order": 1, "exp": 0}] * 2


def test_cj_and_scan():
    sols = doc(["cj", "list", "--bound", "2"])
    assert sum(s["kind"] == "sporadic" for s in sols) == 10
    r = doc(["scan", "--nmax", "12"])
    assert r["table_values_present"] is True and r["count"] == 21


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["cyclo-part"], ["cyclo-part", "x y"], ["cyclo-part", "x*n+1"],
    ["ratio", "degree", "6", "2", "4"], ["ratio", "degree", "2", "1", "1"],
    ["metallic"], ["metallic", "test", "5", "5", "1"], ["scan", "--nmax", "2"],
    ["cj", "list", "--bound", "0"], ["solve-family", "x^2 + z"],
    ["solve-curve", "x+y", "--vars", "x"], ["cyclo-part", "0"],
    ["ratio", "degree", "5", "two", "1"],
])
def test_usage_errors_exit_1(argv):
    code, out, err = call(argv)
    assert code == 1 and out == "" and err.startswith("error")


def test_conductor_cap_is_usage_error(monkeypatch):
    monkeypatch.setenv("CYCLOPOINT_MAX_CONDUCTOR", "5")
    code, _, err = call(["cyclo-part", "x^8+x+3"])
    assert code == 1 and "cap" in err


def test_verification_failure_exits_2(monkeypatch):
    import cyclopoint.metallic as mt
    bad = (((1, 1), 5, 2, 1), ((4, 1), 8, 2, 1))      # second row is wrong
    monkeypatch.setattr(mt, "TABLE_ROWS", bad)
    code, out, _ = call(["metallic", "table"])
    assert code == 2
    d = json.loads(out)
    assert d["schema"] == 1 and "error" in d


def test_pretty_flag_anywhere():
    a = call(["--pretty", "ratio", "minpoly", "5", "2", "1"])
    b = call(["ratio", "minpoly", "5", "2", "1", "--pretty"])
    assert a == b and a[1] == "t^2 - t - 1\n"


def test_deterministic_output():
    argv = ["solve-family", "(n-3)*(x^2+x+1)"]
    assert call(argv) == call(argv)


@pytest.mark.parametrize("path", GOLDEN, ids=lambda p: p.stem)
def test_golden(path):
    g = json.loads(path.read_text())
    code, out, _ = call(g["argv"])
    assert code == g["exit"]
    assert out == g["stdout"]


def test_golden_corpus_present():
    assert len(GOLDEN) >= 20


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "cyclopoint", "ratio", "degree", "5", "2", "1"],
                       capture_output=True, text=True, cwd=pathlib.Path(__file__).parent.parent)
    assert p.returncode == 0 and json.loads(p.stdout)["result"]["degree"] == 2
    p = subprocess.run([sys.executable, "-m", "cyclopoint", "nope"], capture_output=True, text=True)
    assert p.returncode == 1
