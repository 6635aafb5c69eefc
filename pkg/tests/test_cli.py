import csv
import io
import json
import subprocess
import sys

import pytest

from cyclident import identities
from cyclident.cli import main
from cyclident.report import IdentityReport, JSON_KEYS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "eq14", "--n", "3", "--order", "8", "--root-exp", "1", "--mode", "exact")[0] == 0
    code, _, err = run(capsys, "verify", "eq14", "--n", "3", "--order", "3", "--root-exp", "1", "--mode", "exact")
    assert code == 2 and "root order must exceed n" in err
    assert run(capsys, "verify", "eq99", "--n", "1")[0] == 2
    assert run(capsys, "verify", "lemma21", "--n", "2")[0] == 1
    assert run(capsys, "verify", "eq14", "--n", "3", "--mode", "exact")[0] == 2  # missing --order


def test_global_flags_before_subcommand(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify", "eq16", "--n", "5", "--m", "1")
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_verify_json_round_trip(capsys):
    code, out, _ = run(capsys, "verify", "eq18", "--n", "0", "--root-exp", "1", "--format", "json")
    assert code == 0
    line = out.strip()
    record = json.loads(line)
    assert list(record) == list(JSON_KEYS)
    assert record["computed_imag"] == "1/2"
    assert IdentityReport.from_dict(record).to_json() == line


def test_verify_both_modes(capsys):
    code, out, _ = run(capsys, "verify", "sine_ratio", "--n", "5", "--order", "11", "--root-exp", "2", "--x", "0.4",
                       "--mode", "both", "--format", "json")
    assert code == 0
    assert [json.loads(l)["mode"] for l in out.splitlines()] == ["exact", "numeric"]


def test_numeric_verify_draws_seeded_angle(capsys):
    first = run(capsys, "verify", "eq15", "--n", "7", "--seed", "3", "--format", "json")
    second = run(capsys, "verify", "eq15", "--n", "7", "--seed", "3", "--format", "json")
    assert first[0] == 0
    strip = lambda out: {k: v for k, v in json.loads(out).items() if k != "micros"}
    assert strip(first[1]) == strip(second[1])


def test_precision_environment_override(capsys, monkeypatch):
    monkeypatch.setenv("CYCLIDENT_PRECISION_BITS", "320")
    _, out, _ = run(capsys, "verify", "eq14", "--n", "3", "--theta", "1.0", "--mode", "numeric", "--format", "json")
    assert json.loads(out)["params"]["precision_bits"] == 320
    _, out, _ = run(capsys, "verify", "eq14", "--n", "3", "--theta", "1.0", "--mode", "numeric", "--format", "json", "--precision-bits", "96")
    assert json.loads(out)["params"]["precision_bits"] == 96
    monkeypatch.setenv("CYCLIDENT_PRECISION_BITS", "lots")
    assert run(capsys, "verify", "eq14", "--n", "3", "--theta", "1.0", "--mode", "numeric")[0] == 2


def test_sweep_record_counts(capsys):
    code, out, _ = run(capsys, "sweep", "eq16", "--range", "n=1:49:2", "--range", "m=1:10", "--format", "json")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 251
    assert json.loads(lines[-1]) == {"summary": {"total": 250, "passed": 250, "failed": 0, "inapplicable": 0}}


def test_sweep_lemma_reports_even_n_failures(capsys):
    code, out, _ = run(capsys, "sweep", "lemma21", "--range", "n=1:200", "--format", "json")
    assert code == 1
    summary = json.loads(out.splitlines()[-1])["summary"]
    assert summary == {"total": 200, "passed": 100, "failed": 100, "inapplicable": 0}


def test_sweep_csv_columns(capsys):
    code, out, err = run(capsys, "sweep", "eq18", "--range", "n=0:3", "--range", "a=primitive", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:3] == ["identity_id", "n", "a"]
    assert rows[0][3:] == ["mode", "expected", "computed_real", "computed_imag", "residual", "status", "micros"]
    assert all(r[rows[0].index("status")] == "pass" for r in rows[1:])
    assert "passed=" in err


def test_sweep_numeric_samples_and_parallelism(capsys):
    args = ("sweep", "eq15", "--range", "n=1:9:2", "--samples", "4", "--format", "json", "--seed", "11")
    serial = run(capsys, *args)
    parallel = run(capsys, *args, "--parallelism", "2")
    assert serial[0] == parallel[0] == 0
    strip = lambda out: [{k: v for k, v in json.loads(l).items() if k != "micros"} for l in out.splitlines()[:-1]]
    assert len(strip(serial[1])) == 20
    assert strip(serial[1]) == strip(parallel[1])


def test_sweep_bad_range(capsys):
    assert run(capsys, "sweep", "eq16", "--range", "n=1:9:0", "--range", "m=1")[0] == 2
    assert run(capsys, "sweep", "eq16", "--range", "n=1:9")[0] == 2


def test_selftest_subset(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "8,9")
    assert code == 0
    assert out.count("[PASS]") == 2
    code, out, _ = run(capsys, "selftest", "--only", "9", "--json")
    assert json.loads(out)["criteria"][0]["status"] == "pass"
    assert run(capsys, "selftest", "--only", "42")[0] == 2


def test_selftest_catches_sign_flip(capsys, monkeypatch):
    original = identities.theorem1_sum_exact
    monkeypatch.setattr(identities, "theorem1_sum_exact", lambda n, N, a: -original(n, N, a))
    code, out, _ = run(capsys, "selftest", "--only", "9")
    assert code == 1 and "[FAIL]" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cyclident", "verify", "eq11", "--n", "2", "--root-exp", "1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.startswith("[PASS]")
