import json
import subprocess
import sys

import pytest

from halphen import cli
from halphen.certificate import canonical_json


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cubics_plain(capsys):
    code, out, _ = run(capsys, "cubics", "--order", "1", "--format", "plain")
    lines = out.split()
    assert code == 0 and len(lines) == 8
    assert "x^2*y+y^2*z+x*z^2" in lines


def test_cubics_json_schema(capsys):
    code, out, _ = run(capsys, "cubics", "--order", "2", "--json")
    d = json.loads(out)
    assert code == 0 and len(d["data"]["cubics"]) == 44
    row = d["data"]["cubics"][0]
    assert set(row) >= {"pencil", "parameter", "coeffs"} and len(row["coeffs"]) == 10


def test_cubics_latex(capsys):
    code, out, _ = run(capsys, "cubics", "--order", "1", "--format", "latex")
    assert code == 0 and "\\eps" in out


def test_cubics_compare_failure_exit_code(capsys):
    code, _, err = run(capsys, "cubics", "--order", "2", "--compare")
    assert code == 1
    assert "failures" in json.loads(err)
    assert run(capsys, "cubics", "--order", "1", "--compare")[0] == 0


def test_hindex(capsys):
    assert run(capsys, "hindex", "--n", "6")[1].strip() == "-176/49"
    code, out, _ = run(capsys, "hindex", "--table", "3..9")
    assert code == 0 and out.split("\n")[0].split()[:2] == ["3", "-2"]


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["cubics"],
        ["cubics", "--order", "1", "--bogus"],
        ["hindex", "--n", "4"],
        ["hindex"],
        ["params", "--order", "3"],
        ["census", "--order", "0"],
        ["hesse"],
    ],
)
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 2


def test_params(capsys):
    code, out, _ = run(capsys, "params", "--order", "1")
    assert code == 0 and sorted(out.split()) == sorted(["-e", "1+e"])
    code, out, _ = run(capsys, "params", "--order", "2", "--json")
    d = json.loads(out)["data"]
    assert d["rational"] == ["-1", "1/2", "2"]
    assert d["minimal_polynomials"] == ["x^6-3*x^5+60*x^4-115*x^3+60*x^2-3*x+1"]
    assert d["matches_stated_sextic"] is False


def test_params_numeric(capsys):
    code, out, _ = run(capsys, "params", "--order", "3", "--numeric", "--digits", "40")
    assert code == 0 and len(out.split("\n")) - 1 == 26


def test_verify_commands(capsys):
    for argv in (["hesse", "verify"], ["abelian", "verify", "--json"]):
        code, out, _ = run(capsys, *argv)
        assert code == 0
    assert json.loads(out)["passed"] is True


def test_census_json(capsys):
    code, out, _ = run(capsys, "census", "--order", "1", "--json")
    d = json.loads(out)
    assert code == 0 and d["quadruple_total"] == 0 and d["certificate"]["passed"]


def test_crosscheck(capsys):
    code, out, _ = run(capsys, "crosscheck", "--digits", "40")
    assert code == 0 and all(line.startswith("PASS") for line in out.split("\n") if line)


@pytest.mark.parametrize("argv", [["hindex", "--table", "3..12", "--json"], ["params", "--order", "2", "--json"]])
def test_json_round_trip(argv, capsys):
    out = run(capsys, *argv)[1]
    assert canonical_json(json.loads(out)) + "\n" == out


def test_entry_point():
    r = subprocess.run([sys.executable, "-m", "halphen.cli", "nope"], capture_output=True, text=True)
    assert r.returncode == 2 and r.stderr
