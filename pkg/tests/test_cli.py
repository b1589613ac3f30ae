import json
import subprocess
import sys

import pytest

from gessel_walks.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["count", "-m", "4"], "11"),
        (["count", "-m", "5", "--n1", "1"], "37"),
        (["count", "-m", "0"], "1"),
        (["count", "--region", "half", "-m", "2"], "3"),
        (["count", "--region", "diagonal-total", "-m", "3"], "21"),
        (["count", "-m", "7", "--n1", "9"], "0"),
    ],
)
def test_count(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == expected + "\n"


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "-m", "4", "--n1", "2", "--n2", "1", "--format", "json")
    assert code == 0 and json.loads(out)["count"] == "17"


@pytest.mark.parametrize(
    "name,terms",
    [("gessel", "1 2 11 85 782"), ("a", "1 2 7 21 78"), ("g", "1 5 37"), ("F2n_0_1", "0 1 8 73")],
)
def test_sequence(capsys, name, terms):
    code, out, _ = run(capsys, "sequence", name, str(len(terms.split())))
    assert code == 0 and out.split() == terms.split()


def test_usage_errors_exit_2(capsys, monkeypatch):
    assert run(capsys, "count", "-m", "70")[0] == 2
    monkeypatch.setenv("GESSEL_MMAX", "3")
    code, _, err = run(capsys, "count", "-m", "4")
    assert code == 2 and "m_max" in err
    with pytest.raises(SystemExit) as exc:
        main(["count", "-m", "-1"])
    assert exc.value.code == 2


def test_m_max_flag_overrides_env(capsys, monkeypatch):
    monkeypatch.setenv("GESSEL_MMAX", "3")
    assert run(capsys, "count", "-m", "4", "--m-max", "4")[:2] == (0, "11\n")


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "--suite", "c3")[0] == 0
    code, out, _ = run(capsys, "verify", "--suite", "section4", "--strict")
    assert code == 1 and "overall: FAIL (strict)" in out


def test_verify_json_round_trip(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "theorem5", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["all_passed"]
    inst = doc["suites"][0]["instances"][0]
    assert set(inst) >= {"identity_id", "params", "lhs", "rhs", "passed"}
    assert isinstance(inst["lhs"], str)


def test_output_file(tmp_path, capsys):
    path = tmp_path / "report.csv"
    code, out, _ = run(capsys, "verify", "--suite", "c3", "--format", "csv", "--output", str(path))
    assert code == 0 and out.startswith("overall: PASS")
    assert path.read_text().splitlines()[0].startswith("suite,identity_id")


def test_fit(capsys):
    code, out, _ = run(capsys, "fit", "c4", "2")
    assert code == 0 and "n^3 + 15*n^2 + 74*n + 132" in out
    code, out, _ = run(capsys, "fit", "c1", "1", "--format", "json")
    p, q = json.loads(out)["findings"]
    assert code == 0 and p["coefficients"] == ["5/27"]
    assert q["coefficients"] == ["-5/27", "61/90", "37/90"]


def test_export_csv(capsys):
    code, out, _ = run(capsys, "export", "-m", "2")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "m,n1,n2,count"
    assert "2,2,1,2" in lines


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "gessel_walks", "verify", "--suite", "c4", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
