import csv
import io
import json
import subprocess
import sys

import pytest

from fantomlab import cli
from fantomlab.reports import ClaimReport, emit


def run(capsys, *argv):
    status = cli.main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


GOOD = [
    ("fantom", "--x", "3"),
    ("rs", "--x", "3"),
    ("prs", "--x", "3"),
    ("epsilon", "--x", "3"),
    ("induction", "--x", "3"),
    ("blocks", "--x", "3"),
    ("combs", "--x", "3"),
    ("bound", "--x", "3"),
    ("crossover", "--x-max", "20"),
    ("window", "--x", "4"),
    ("stringent", "--x", "4"),
    ("scan", "--max", "20000"),
    ("audit", "--x", "3"),
    ("grid", "--x", "2"),
    ("all", "--x", "2"),
]


@pytest.mark.parametrize("argv", GOOD, ids=[a[0] for a in GOOD])
def test_known_good_exit_zero(capsys, argv):
    status, out, _ = run(capsys, *argv, "--format", "json", "--workers", "1")
    assert status == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert records
    assert all(r["status"] in ("verified", "audited-pass") for r in records)


FAULTY = [("fantom", "--x", "3"), ("rs", "--x", "3"), ("prs", "--x", "3"),
          ("epsilon", "--x", "3"), ("induction", "--x", "3"), ("window", "--x", "3"),
          ("stringent", "--x", "3"), ("scan", "--max", "1000")]


@pytest.mark.parametrize("argv", FAULTY, ids=[a[0] for a in FAULTY])
def test_fault_injection_exit_two(capsys, argv):
    status, out, _ = run(capsys, *argv, "--format", "json", "--inject-fault", "--workers", "1")
    assert status == 2
    assert any(json.loads(line)["status"] == "violated" for line in out.splitlines())


def test_failed_audit_exit_two(capsys):
    status, out, _ = run(capsys, "combs", "--x", "4", "--format", "json")
    assert status == 2
    statuses = {json.loads(line)["status"] for line in out.splitlines()}
    assert "audited-fail" in statuses and "violated" not in statuses


def test_fantom_text_listing(capsys):
    status, out, _ = run(capsys, "fantom", "--x", "3", "--format", "text")
    assert status == 0
    assert out.splitlines()[0] == "1 7 11 13 17 19 23 29"


def test_crossover_json(capsys):
    status, out, _ = run(capsys, "crossover", "--x-max", "20", "--format", "json")
    rec = json.loads(out)
    assert status == 0
    assert rec["evidence"]["first"]["p_x"] == 53
    assert rec["evidence"]["first"]["e"] == 2810
    c = rec["evidence"]["first"]["C"]
    assert set(c) == {"value", "decimal"} and "/" in c["value"]


def test_unknown_flag(capsys):
    status, _, err = run(capsys, "fantom", "--x", "3", "--bogus")
    assert status == 1 and "unrecognized arguments" in err


def test_unknown_command(capsys):
    status, _, err = run(capsys, "nope")
    assert status == 1 and "usage error" in err


def test_odd_input(capsys):
    status, _, err = run(capsys, "bound", "--x", "3", "--e", "27")
    assert status == 1 and err.startswith("odd input")


def test_guard_violation(capsys):
    status, _, err = run(capsys, "rs", "--x", "9")
    assert status == 1 and err.startswith("resource error") and "223092870" in err


def test_guard_can_be_raised(capsys):
    status, _, err = run(capsys, "fantom", "--x", "4", "--max-L", "100")
    assert status == 1 and "210" in err


def test_missing_x(capsys):
    status, _, err = run(capsys, "rs")
    assert status == 1 and "--x" in err


def test_unwritable_output(capsys, tmp_path):
    status, _, err = run(capsys, "fantom", "--x", "2", "--output", str(tmp_path / "no" / "f"))
    assert status == 1 and "output error" in err


def test_output_file(capsys, tmp_path):
    path = tmp_path / "r.jsonl"
    status, out, _ = run(capsys, "rs", "--x", "2", "--format", "json", "--output", str(path))
    assert status == 0 and out == ""
    assert json.loads(path.read_text().splitlines()[0])["claim"] == "rs.table"


def test_csv_columns(capsys):
    status, out, _ = run(capsys, "epsilon", "--x", "3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["claim", "status", "parameters", "evidence", "timing"]
    assert rows[1][0] == "sums.epsilon" and rows[1][1] == "verified"
    assert json.loads(rows[1][3])["placements"] == {"10": 1, "20": 1, "30": 2}


def test_grid_csv_to_file(capsys, tmp_path):
    path = tmp_path / "g.csv"
    status, out, _ = run(capsys, "grid", "--x", "3", "--kind", "PRS", "--grid-format", "csv",
                         "--grid-output", str(path), "--format", "json")
    assert status == 0
    assert path.read_text().splitlines()[0].startswith("summand,1,5,7")
    assert json.loads(out)["evidence"]["canceled"] == [5, 25]


def test_config_file(capsys, tmp_path):
    conf = tmp_path / "run.conf"
    conf.write_text("# defaults\nformat = json\nx = 2\n")
    status, out, _ = run(capsys, "fantom", "--config", str(conf))
    assert status == 0
    assert json.loads(out.splitlines()[0])["parameters"]["x"] == 2
    status, out, _ = run(capsys, "fantom", "--config", str(conf), "--x", "3")
    assert json.loads(out.splitlines()[0])["parameters"]["x"] == 3


def test_config_rejects_unknown_key(capsys, tmp_path):
    conf = tmp_path / "run.conf"
    conf.write_text("colour = blue\n")
    status, _, err = run(capsys, "fantom", "--x", "2", "--config", str(conf))
    assert status == 1 and "unknown config key" in err


def test_workers_env_and_flag(monkeypatch):
    monkeypatch.setenv(cli.ENV_WORKERS, "3")
    assert cli.make_config(["scan"]).workers == 3
    assert cli.make_config(["scan", "--workers", "2"]).workers == 2
    monkeypatch.setenv(cli.ENV_WORKERS, "0")
    with pytest.raises(cli.UsageError):
        cli.make_config(["scan"])


def test_emit_is_deterministic():
    rep = ClaimReport("rs.symmetry", "verified", {"x": 3}, {"keys": "15 even keys"})
    for fmt in ("json", "csv", "text"):
        assert emit([rep], fmt) == emit([rep], fmt)


def test_symmetry_evidence(capsys):
    _, out, _ = run(capsys, "rs", "--x", "3", "--format", "json")
    rec = [json.loads(line) for line in out.splitlines() if '"rs.symmetry"' in line][0]
    assert rec["status"] == "verified"
    assert rec["evidence"]["keys"] == "15 even keys, 7 mirror pairs + center"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fantomlab", "fantom", "--x", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "1 5"
