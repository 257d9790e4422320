import json
import subprocess
import sys

import pytest

from ratnewforms.cli import main, pretty
from ratnewforms.qseries import QSeries


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_pretty():
    assert pretty(QSeries([0, 1, -24, 252])) == "q - 24q^2 + 252q^3 + O(q^4)"
    assert pretty(QSeries([-1, 0, 2], 3)) == "-1 + 2q^2 + O(q^3)"
    assert pretty(QSeries.zero(5)) == "O(q^5)"


def test_expand_label(capsys):
    code, out, _ = run(capsys, "expand", "--label", "Delta_22_3_plus_a", "--prec", "4")
    assert code == 0
    assert out.strip() == "q + 1728q^2 - 59049q^3 + O(q^4)"


def test_expand_json(capsys):
    code, out, _ = run(capsys, "expand", "--expr", '["*", "Q", "Delta"]', "--prec", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["coeffs"] == ["0", "1", "216"]


@pytest.mark.parametrize(
    "argv",
    [
        ["expand", "--label", "nope"],
        ["expand", "--expr", "[oops"],
        ["expand", "--expr", '["?", 1]'],
        ["expand"],
        ["bogus"],
        [],
        ["dims", "--level", "5"],
        ["catalog", "--summatory", "12", "31"],
        ["galrep", "--label", "Delta_8_2_plus"],
        ["heuristic", "-r", "0"],
        ["expand", "--label", "Delta_12_1", "--prec", "0"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_help_exits_0(capsys):
    assert run(capsys, "--help")[0] == 0


def test_dims(capsys):
    code, out, _ = run(capsys, "dims", "--level", "8", "--eps", "-", "--weight", "16", "--format", "json")
    assert code == 0
    assert json.loads(out) == [{"N": 8, "eps": "-", "mass": "3/2", "dims": {"16": 2}}]


def test_heuristic(capsys):
    code, out, _ = run(capsys, "heuristic", "--figure2")
    assert code == 0 and "1951 quadratics, 276 split" in out
    code, out, _ = run(capsys, "heuristic", "-r", "1", "-s", "12", "-k", "10", "--format", "json")
    assert f"{json.loads(out)['prob']:.1e}" == "2.2e-16"


def test_galrep_pair(capsys):
    assert run(capsys, "galrep", "--label", "Delta_8_2_plus", "--poly", "F_2")[0] == 0
    code, out, _ = run(capsys, "galrep", "--label", "Delta_8_8_plus", "--poly", "F_8d")
    assert code == 1 and "p=3" in out


def test_galrep_ell3_all_pass(capsys):
    code, out, _ = run(capsys, "galrep", "--ell", "3")
    assert code == 0 and "phi_8: 10 forms" in out


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "--level", "3", "--weight", "22")
    assert code == 0 and "count=2 unforced=2" in out
    assert run(capsys, "catalog", "--summatory", "50", "30")[1].strip() == "1"
    code, out, _ = run(capsys, "catalog", "--forms", "--level", "1", "--format", "json")
    assert {f["label"] for f in json.loads(out)} >= {"Delta_12_1"}


def test_verify_passing_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "heuristic", "-v")
    assert code == 0
    assert out.count("PASS") == 9 and "heuristic: 9 passed, 0 failed" in out


def test_verify_dims_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "dims", "--format", "json")
    assert code == 0 and json.loads(out)["summary"]["dims"]["failed"] == 0


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "ratnewforms", "catalog", "--level", "16"],
                       capture_output=True, text=True, timeout=120)
    assert r.returncode == 0 and r.stdout.strip() == "(no entries)"
