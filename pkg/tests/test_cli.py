import json

import pytest

from lommelint.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_json(capsys):
    code, out, err = run(capsys, "eval", "--mu", "1", "--nu", "1", "--x", "2", "--func", "struve")
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(1.10275978736772, rel=1e-13)
    assert "lommelint eval:" in err


def test_integral_closed_route(capsys):
    code, out, _ = run(capsys, "integral", "--mu", "1", "--nu", "0.5", "--beta", "1", "--x", "2",
                       "--route", "closed")
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(0.20160791113057, rel=1e-12)


def test_bound_csv(capsys):
    code, out, _ = run(capsys, "bound", "--kind", "2.9", "--mu", "0.5", "--nu", "1", "--beta", "0.25",
                       "--x", "0.5", "--format", "csv")
    header, row = out.strip().splitlines()
    rec = dict(zip(header.split(","), row.split(",")))
    assert code == 0 and rec["kind"] == "LB_SERIES" and float(rec["margin"]) > 0


def test_bound_out_of_domain(capsys):
    code, out, _ = run(capsys, "bound", "--kind", "LB_REFINED", "--mu", "1", "--nu", "0.5", "--beta", "0.5",
                       "--x", "1")
    assert code == 0 and json.loads(out)["in_domain"] is False


def test_invalid_input_exit_code(capsys):
    code, _, err = run(capsys, "integral", "--mu", "1", "--nu", "0.5", "--beta", "1.5", "--x", "2")
    assert code == 2 and "beta" in err


def test_verify_small_grid_writes_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify", "--mu", "0,1", "--nu", "0.5,1", "--beta", "0.5", "--x", "1,5",
                     "--no-tables", "--out", str(out))
    assert code == 0
    assert json.loads(out.read_text())["summary"]["violations"] == 0


def test_verify_exit_code_reflects_golden_tables(capsys):
    code, out, _ = run(capsys, "verify", "--mu", "1", "--nu", "0.5", "--beta", "0.5", "--x", "1")
    summary = json.loads(out)["summary"]
    assert summary["golden_cells"] == 252
    assert code == (0 if summary["golden_failures"] == 0 else 1)


def test_table_env_out_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("LOMMELINT_OUT_DIR", str(tmp_path))
    code, _, _ = run(capsys, "table", "--id", "2")
    assert code == 0
    lines = (tmp_path / "table2.csv").read_text().splitlines()
    assert lines[0].startswith("mu,nu,beta,x=0.5")
    assert len(lines) == 19


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--id", "1", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and len(doc["cells"]) == 18 and len(doc["cells"][0]) == 7
