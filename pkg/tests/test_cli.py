import json
from fractions import Fraction
import subprocess
import sys

import pytest

from g2spheres.cli import CliConfig, UsageError, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_pkf_json(capsys):
    code, out, _ = run(capsys, "pkf", "--space", "s6", "--format", "json")
    assert code == 0
    terms = json.loads(out)["terms"]
    assert len(terms) == 21
    coeff = {(t["left"], t["right"]): t["coeff"] for t in terms}
    assert coeff[("mu00", "mu63")] == "2"


def test_pkf_lambda_substitution(capsys):
    _, out, _ = run(capsys, "pkf", "--lambda", "4")
    coeff = {(t["left"], t["right"]): t["coeff"] for t in json.loads(out)["terms"]}
    # 15 lambda^3 / (8 pi^3) at lambda = 4
    assert coeff[("mu63", "mu63")] == "120 * pi^-3"


@pytest.mark.parametrize("argv", [
    ("pkf",), ("pkf", "--space", "s7", "--format", "latex"), ("local-k", "--group", "g2"),
    ("restrict",), ("tables", "--space", "s7"), ("eval-ball", "--format", "latex"),
])
def test_output_is_byte_stable(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second and first[0] == 0


def test_restrict_rows_all_equal(capsys):
    _, out, _ = run(capsys, "restrict", "--format", "json")
    rows = json.loads(out)
    assert len(rows) == 13
    assert all(r["equal"] for r in rows)
    assert set(rows[0]) == {"argument", "stored", "recomputed", "equal"}


def test_latex_notation(capsys):
    _, out, _ = run(capsys, "pkf", "--format", "latex")
    assert r"\mu^\lambda_{6,3}\odot \mu^\lambda_{6,3}" in out
    assert r"\overline{\phi}^\lambda_{3}" in out


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all")
    assert code == 0
    lines = out.splitlines()
    assert all(line.split()[0] in ("PASS", "SKIPPED(external-data)") for line in lines)
    assert any(line.startswith("SKIPPED(external-data)") for line in lines)


def test_verify_fails_on_wrong_external_rows(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps([
        {"operator": "K_U3", "argument": "Delta41+Delta42", "terms": []},
        {"operator": "K_U3", "argument": "Delta63", "terms": []},
    ]))
    code, out, _ = run(capsys, "verify", "--suite", "local", "--external-tables", str(path))
    assert code == 1
    assert "FAIL su3: glob(K(chi)) = pkf" in out


def test_malformed_external_tables_exit_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "local-k", "--external-tables", str(path))
    assert code == 2 and "malformed" in err


@pytest.mark.parametrize("lam", ["2", "-1", "abc"])
def test_bad_lambda_exit_2(capsys, lam):
    code, _, err = run(capsys, "pkf", "--lambda", lam)
    assert code == 2 and "--lambda" in err


def test_lambda_pole_exit_2(capsys):
    # the ball values carry negative powers of s
    assert CliConfig("eval-ball", lam="0").s_value == 0
    code, _, err = run(capsys, "eval-ball", "--lambda", "0")
    assert code == 2 and "pole" in err


def test_flat_pkf(capsys):
    code, out, _ = run(capsys, "pkf", "--lambda", "0")
    assert code == 0
    assert len(json.loads(out)["terms"]) == 10


@pytest.mark.parametrize("argv", [("frobnicate",), ("pkf", "--space", "s8"), ("pkf", "--bogus")])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    assert exc.value.code == 2


def test_rational_lambda():
    assert CliConfig("pkf", lam="9/4").s_value == Fraction(3, 2)
    with pytest.raises(UsageError):
        CliConfig("pkf", lam="1/2").s_value


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "g2spheres", "verify", "--suite", "forms"],
                         capture_output=True, text=True, timeout=120)
    assert res.returncode == 0
    assert res.stdout.count("PASS") == 4
