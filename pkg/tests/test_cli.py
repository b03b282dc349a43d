import json

import jsonschema
import pytest

from qthreshold.cli import main, parse_grid
from qthreshold.emit import (curve_to_csv, fmt_float, jsonable_witness,
                             load_report_schema, to_json)
from qthreshold.errors import ValidationError
from qthreshold import get_field, success_exact, repetition_code, word
from qthreshold.results import VerifyEntry
import qthreshold.cli as cli_mod


def run_cli(args, capsys=None):
    code = main(args)
    return code


def test_threshold_exact_csv(tmp_path):
    out = tmp_path / "curve.csv"
    assert main(["threshold", "--code", "rep:2:3", "--grid", "0:0.5:0.05",
                 "--mode", "exact", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "p,g,logit_g,mode,half_width,samples"
    assert len(lines) == 12                     # header + 11 rows
    first = lines[1].split(",")
    assert first[0] == "0" and first[1] == "1"
    assert first[2] == ""                       # logit undefined at g = 1
    assert first[3] == "exact" and first[4] == "0" and first[5] == ""


def test_threshold_stdout(capsys):
    assert main(["threshold", "--code", "rep:2:3", "--grid", "0.1,0.3"]) == 0
    outp = capsys.readouterr().out
    assert outp.startswith("p,g,logit_g,mode,half_width,samples\n")
    assert len(outp.splitlines()) == 3


def test_threshold_default_grid(capsys):
    assert main(["threshold", "--code", "rep:3:3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1 + 67                 # 0 .. 0.66 inclusive


def test_empty_grid_header_only(capsys):
    assert main(["threshold", "--code", "rep:2:3", "--grid", ""]) == 0
    assert capsys.readouterr().out == "p,g,logit_g,mode,half_width,samples\n"


def test_malformed_code_file(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 3\n1 1 1\n", encoding="ascii")
    assert main(["threshold", "--code", str(bad)]) == 2
    assert "q n k" in capsys.readouterr().err


def test_usage_errors(capsys):
    assert main(["threshold"]) == 2                      # missing --code
    assert main(["bogus-command"]) == 2
    assert main(["threshold", "--code", "rep:2:3", "--grid", "0:1"]) == 2
    assert main(["threshold", "--code", "rep:2:3", "--grid", "0:0.5:-0.1"]) == 2
    assert main([]) == 2


def test_help_exits_zero(capsys):
    for args in (["--help"], ["threshold", "--help"], ["verify", "--help"],
                 ["erasure", "--help"]):
        assert main(args) == 0
    assert main(["--version"]) == 0


def test_enum_cap_exit_code(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("QTHRESHOLD_ENUM_CAP", "16")
    assert main(["threshold", "--code", "rep:2:10", "--grid", "0.1"]) == 3
    assert "cap" in capsys.readouterr().err


def test_unwritable_output(tmp_path, capsys):
    target = tmp_path / "missing-dir" / "out.csv"
    assert main(["threshold", "--code", "rep:2:3", "--grid", "0.1",
                 "--out", str(target)]) == 3


def test_mc_determinism_across_parallelism(tmp_path):
    outs = []
    for degree in ("1", "8"):
        path = tmp_path / f"mc{degree}.csv"
        assert main(["threshold", "--code", "rep:2:8", "--grid", "0.1:0.3:0.1",
                     "--mode", "mc", "--samples", "50000", "--seed", "5",
                     "--parallel", degree, "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    rerun = tmp_path / "mc-again.csv"
    assert main(["threshold", "--code", "rep:2:8", "--grid", "0.1:0.3:0.1",
                 "--mode", "mc", "--samples", "50000", "--seed", "5",
                 "--parallel", "1", "--out", str(rerun)]) == 0
    assert rerun.read_bytes() == outs[0]


def test_verify_report_schema(tmp_path):
    out = tmp_path / "report.json"
    assert main(["verify", "--all", "--q", "2", "--nmax", "4", "--seed", "7",
                 "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    jsonschema.validate(payload, load_report_schema())
    verifiers = {e["verifier"] for e in payload["entries"]}
    assert verifiers == {"talagrand", "russo", "iso", "delta-bound", "gbound",
                         "largesupport", "symmetry", "e1-augment"}
    assert all(e["verdict"] == "holds" for e in payload["entries"])


def test_verify_subset_and_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["verify", "--verifiers", "russo,delta-bound", "--q", "2,3",
            "--nmax", "4", "--seed", "3"]
    assert main(args + ["--out", str(a), "--parallel", "1"]) == 0
    assert main(args + ["--out", str(b), "--parallel", "8"]) == 0
    assert a.read_bytes() == b.read_bytes()
    verifiers = {e["verifier"] for e in json.loads(a.read_text())["entries"]}
    assert verifiers == {"russo", "delta-bound"}


def test_verify_unknown_verifier(capsys):
    assert main(["verify", "--verifiers", "nope", "--q", "2"]) == 2


def test_verify_writes_witness_on_violation(tmp_path, monkeypatch, capsys):
    fake = [VerifyEntry("russo", "synthetic", "violated", margin=-1.0,
                        witness={"witness": {"reason": "synthetic"}})]
    monkeypatch.setattr(cli_mod, "run_suite",
                        lambda *args, **kwargs: fake)
    out = tmp_path / "report.json"
    assert main(["verify", "--all", "--q", "2", "--out", str(out)]) == 1
    witness = json.loads((tmp_path / "report.json.witness.json").read_text())
    assert witness["violations"][0]["instance"] == "synthetic"


def test_erasure_cli(tmp_path):
    out = tmp_path / "erasure.csv"
    assert main(["erasure", "--code", "hamming:7:4", "--grid", "0.1,0.3,0.5",
                 "--mode", "exact", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "p,ambiguity,mode,half_width,samples"
    assert len(lines) == 4


def test_config_file_with_flag_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("code = rep:2:3\ngrid = 0.1,0.2\nmode = exact\n",
                   encoding="ascii")
    assert main(["threshold", "--config", str(cfg)]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 3
    # flag after --config wins
    assert main(["threshold", "--config", str(cfg), "--grid", "0.1"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 2


def test_config_file_errors(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("grid 0.1\n", encoding="ascii")
    assert main(["threshold", "--config", str(cfg)]) == 2
    assert main(["--config", str(cfg), "threshold"]) == 2
    assert main(["threshold", "--config"]) == 2


# ---------------------------------------------------------------------------
# Emission details


def test_fmt_float_17_digits():
    assert fmt_float(0.1) == "0.10000000000000001"
    assert fmt_float(1.0) == "1"
    assert float(fmt_float(1 / 3)) == 1 / 3


def test_parse_grid():
    assert parse_grid("0:0.5:0.05", 2) == [0.05 * j for j in range(11)]
    assert parse_grid("0.2", 2) == [0.2]
    assert parse_grid("0.1,0.9", 2) == [0.1, 0.9]
    assert parse_grid("0.9,0.1", 2) == [0.1, 0.9]   # rows come out ordered by p
    assert parse_grid(None, 2) == [j / 100 for j in range(51)]
    assert parse_grid(None, 3) == [j / 100 for j in range(67)]
    assert parse_grid("", 5) == []
    with pytest.raises(ValidationError):
        parse_grid("0:0.5:0", 2)
    with pytest.raises(ValidationError):
        parse_grid("0,2.5", 2)
    with pytest.raises(ValidationError):
        parse_grid("x", 2)


def test_curve_csv_roundtrip_values():
    curve = success_exact(repetition_code(2, 3), [0.0, 0.25])
    text = curve_to_csv(curve)
    rows = [line.split(",") for line in text.splitlines()[1:]]
    assert float(rows[1][1]) == curve.rows[1].g


def test_jsonable_witness():
    w = word(get_field(3), (0, 2, 1))
    payload = jsonable_witness({"witness": (w, 2, 1)})
    assert payload == {"witness": [{"q": 3, "entries": [0, 2, 1]}, 2, 1]}
    assert json.loads(to_json(payload)) == payload
