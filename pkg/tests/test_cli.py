import csv
import io
import json
import math
import subprocess
import sys

import pytest

from etastrip.cli import main, parse_complex
from etastrip.zeros import ZERO_RECORD_FIELDS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("text, value", [
    ("1+0i", 1 + 0j), ("0.5+14i", 0.5 + 14j), ("-1-2.5i", -1 - 2.5j), ("+0.25-0i", 0.25 + 0j),
])
def test_parse_complex(text, value):
    assert parse_complex(text) == value


@pytest.mark.parametrize("text", ["1 + 2i", "1e3+2i", "0.5", "i", "0.5+14j", "1+2i3"])
def test_parse_complex_rejects(text):
    with pytest.raises(Exception):
        parse_complex(text)


def test_eval_eta(capsys):
    code, out, _ = run(capsys, "eval", "--what", "eta", "--s", "1+0i", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["re"] == pytest.approx(math.log(2), abs=1e-10)
    assert data["error_bound"] <= 1e-10


def test_eval_human_has_twelve_digits(capsys):
    code, out, _ = run(capsys, "eval", "--s", "1+0i")
    assert code == 0
    assert "0.69314718056" in out


def test_eval_polar(capsys):
    code, out, _ = run(capsys, "eval", "--what", "polar", "--s", "0.5+14i", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["rho"] == pytest.approx(1.0, abs=1e-10)
    assert -math.pi < data["theta"] <= math.pi


@pytest.mark.parametrize("what", ["zeta", "phi", "omega", "breakdown"])
def test_eval_other_targets(capsys, what):
    code, out, _ = run(capsys, "eval", "--what", what, "--s", "0.5+10i", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1 and rows[0]["what"] == what


@pytest.mark.parametrize("argv", [
    ("eval", "--what", "eta", "--s", "-1+0i"),
    ("eval", "--what", "phi", "--s", "1.5+2i"),
    ("eval", "--what", "zeta", "--s", "1+0i"),
    ("eval", "--what", "breakdown", "--s", "0.3+2i"),
    ("eval", "--s", "garbage"),
])
def test_eval_domain_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert len(err.strip().splitlines()) == 1


def test_scan_counts(capsys):
    code, out, err = run(capsys, "scan", "0", "30", "--format", "csv", "--jobs", "1")
    assert code == 0
    assert out.startswith(",".join(ZERO_RECORD_FIELDS) + "\r\n")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 3
    assert [float(r["beta"]) for r in rows] == sorted(float(r["beta"]) for r in rows)
    assert all(r["theta_nonzero"] == "true" for r in rows)
    assert "3 zeros" in err

    code, out, _ = run(capsys, "scan", "0", "10", "--format", "json", "--jobs", "1")
    assert code == 0 and json.loads(out)["count"] == 0


def test_scan_bad_range(capsys):
    code, _, err = run(capsys, "scan", "10", "0")
    assert code == 2 and "t_lo < t_hi" in err


def test_scan_output_independent_of_jobs(capsys):
    _, one, _ = run(capsys, "scan", "10", "40", "--format", "json", "--jobs", "1")
    _, many, _ = run(capsys, "scan", "10", "40", "--format", "json", "--jobs", "3")
    assert one == many


def test_verify_single_identity(capsys):
    code, out, _ = run(capsys, "verify", "--identities", "RHO_ONE", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["verdict"] == "pass" and len(report["results"]) == 1


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--identities", "all", "--format", "json", "--jobs", "1")
    assert code == 0
    report = json.loads(out)
    assert len(report["results"]) == 17
    assert report["tool_version"] and report["config"]["grid"]["seed"] == 20240917


def test_verify_unknown_identity(capsys):
    code, _, err = run(capsys, "verify", "--identities", "NO_SUCH")
    assert code == 2 and "NO_SUCH" in err


def test_verify_hard_failure_exits_1(capsys, monkeypatch):
    import dataclasses

    import etastrip.verify as verify

    strict = dataclasses.replace(verify.CATALOG["RHO_ONE"], threshold=0.0)
    monkeypatch.setitem(verify.CATALOG, "RHO_ONE", strict)
    code, out, _ = run(capsys, "verify", "--identities", "RHO_ONE", "--jobs", "1")
    assert code == 1 and "FAIL" in out


def test_verify_seed_env_and_out_file(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("ETASTRIP_SEED", "5")
    target = tmp_path / "report.json"
    code, out, err = run(capsys, "verify", "--identities", "FUNC_EQ", "--format", "json",
                         "--out", str(target))
    assert code == 0 and out == "" and "verdict: pass" in err
    assert json.loads(target.read_text())["config"]["grid"]["seed"] == 5
    assert [p.name for p in tmp_path.iterdir()] == ["report.json"]


def test_verify_json_stable_modulo_timestamp(capsys):
    argv = ("verify", "--identities", "ARG_SUM,THETA_G,ODD_G", "--format", "json", "--jobs", "1")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    a, b = json.loads(first), json.loads(second)
    a.pop("timestamp"), b.pop("timestamp")
    assert a == b
    strip = lambda text: "\n".join(l for l in text.splitlines() if '"timestamp"' not in l)
    assert strip(first) == strip(second)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "etastrip", "eval", "--s", "2+0i", "--what", "zeta",
                           "--format", "json"], capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["re"] == pytest.approx(math.pi ** 2 / 6, abs=1e-10)
