from __future__ import annotations

import csv
import io
import json
import subprocess
import sys
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superconf.cli import UsageError, decode, encode, format_label, main, parse_label, parse_weight
from superconf.superalg import ModuleLabel, f4, sl_mn, spo23


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, decode(json.loads(out))


def test_levels_f4(capsys):
    code, data = run_json(capsys, "levels", "--algebra", "F4")
    assert code == 0
    assert data["solutions"] == [F(-3, 2), F(1)]


def test_levels_reports_exclusions(capsys):
    code, data = run_json(capsys, "levels", "--algebra", "sl", "--m", "2", "--n", "1")
    assert data["solutions"] == [F(-1, 2)]
    assert data["excluded"] == [{"level": F(-1), "reason": "critical level of g"}]


def test_negative_rational_parameters(capsys):
    code, data = run_json(capsys, "levels", "--algebra", "D21a", "--a", "-1/2")
    assert code == 0 and data["solutions"] == [F(-1, 2)]
    code, data = run_json(capsys, "delta", "--algebra", "spo23", "--k", "-3/4", "--label", "(1,6)")
    assert data["delta"] == 3


def test_delta_with_fundamental_weight_sums(capsys):
    code, data = run_json(capsys, "delta", "--algebra", "osp", "--m", "10", "--n", "1", "--k", "-2",
                          "--label", "(1w1,w1)")
    assert code == 0 and data["delta"] == 1


def test_sieve_table(capsys):
    code, out, _ = run(capsys, "sieve", "--algebra", "spo23", "--k", "-3/4", "--labels", "(1,6),(0,1)")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["label", "delta", "class"]
    assert any(line.split() == ["(1,6)", "3", "integral"] for line in lines)
    assert any(line.split()[-1] == "non-integral" for line in lines)


def test_tensor_csv(capsys):
    code, out, _ = run(capsys, "tensor", "--type", "A1", "--left", "1", "--right", "6", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert [(r["weight"], r["multiplicity"]) for r in rows] == [("(5)", "1"), ("(7)", "1")]


def test_closure_spo23(capsys):
    code, data = run_json(capsys, "closure", "--algebra", "spo23", "--k", "-3/4", "--labels", "(1,2)")
    assert code == 0 and data["complete"]
    assert {r["label"] for r in data["family"]} == {"(0,0)", "(1,2)", "(2,2)", "(3,0)"}


def test_chain_g3(capsys):
    code, data = run_json(capsys, "chain", "--algebra", "G3", "--k", "1", "--label", "(8,0)",
                          "--generator", "(1,w1)")
    assert code == 0
    assert data["trap"] and not data["contains_vacuum"]
    assert set(data["visited"]) == {"(8,[0,0])", "(7,[1,0])", "(6,[1,0])", "(5,[0,0])"}


def test_fock_commands(capsys):
    code, data = run_json(capsys, "fock-singular", "--m", "0", "--pairs", "1", "--depth", "2",
                          "--subalgebra", "sp")
    assert code == 0
    assert [(r["weight"], r["energy"]) for r in data["singular"]] == [([F(0)], F(0)), ([F(1)], F(1, 2))]
    code, data = run_json(capsys, "fock-dim", "--m", "1", "--n", "0", "--depth", "1/2")
    assert [(r["energy"], r["even"], r["odd"]) for r in data["pieces"]] == [(F(0), 1, 0), (F(1, 2), 0, 1)]


def test_w_command(capsys):
    code, data = run_json(capsys, "W", "--n", "1", "--i", "1")
    assert code == 0 and data["ok"] and data["energy"] == 1


def test_out_file(capsys, tmp_path):
    target = tmp_path / "levels.json"
    code, out, _ = run(capsys, "levels", "--algebra", "G3", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert decode(json.loads(target.read_text()))["solutions"] == [F(-4, 3), F(1)]


def test_verify_exit_codes(capsys):
    code, data = run_json(capsys, "verify", "g3-ledger")
    assert code == 0 and data["failed"] == 0
    code, data = run_json(capsys, "verify", "thm-cf")
    assert code == 1 and data["failed"] == 2
    code, _, err = run(capsys, "verify", "nonexistent")
    assert code == 2 and "unknown suite" in err


def test_usage_errors(capsys):
    assert run(capsys, "levels")[0] == 2
    assert run(capsys, "levels", "--algebra", "E8")[0] == 2
    assert run(capsys, "levels", "--algebra", "sl", "--m", "3")[0] == 2
    assert run(capsys, "delta", "--algebra", "F4", "--k", "1", "--label", "(1)")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_engine_errors_exit_one(capsys):
    code, _, err = run(capsys, "levels", "--algebra", "D21a", "--a", "-1")
    assert code == 1 and "error[catalog]" in err
    code, _, err = run(capsys, "delta", "--algebra", "sl", "--m", "3", "--n", "2", "--k", "0",
                       "--label", "q=1:([1,0],1)")
    assert code == 1 and "error[pole]" in err
    code, _, err = run(capsys, "tensor", "--type", "A2", "--left", "[3,3]", "--right", "[3,3]", "--cap", "5")
    assert code == 1 and "error[cap]" in err


F4_OVERRIDE = {
    "family": "F4", "name": "F(4) from file", "h_vee": "3",
    "factors": [{"kind": "simple", "type": "A1", "scaling": "-2/3"}, {"kind": "simple", "type": "B3", "scaling": "1"}],
    "branching": [{"weights": [[1], [0, 0, 1]]}],
}


def test_catalog_override_file_and_env(capsys, tmp_path, monkeypatch):
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps({"algebras": {"myF4": F4_OVERRIDE}}))
    code, data = run_json(capsys, "levels", "--algebra", "myF4", "--catalog", str(path))
    assert code == 0 and data["algebra"] == "F(4) from file"
    assert data["solutions"] == [F(-3, 2), F(1)]
    monkeypatch.setenv("SUPERCONF_CATALOG", str(path))
    code, data = run_json(capsys, "levels", "--algebra", "myF4")
    assert data["solutions"] == [F(-3, 2), F(1)]
    path.write_text("{not json")
    assert run(capsys, "levels", "--algebra", "myF4")[0] == 2


def test_console_script_module_entry():
    res = subprocess.run([sys.executable, "-m", "superconf.cli", "levels", "--algebra", "G3"],
                         capture_output=True, text=True, check=True)
    assert "-4/3" in res.stdout


def test_parse_weight_forms():
    assert parse_weight("2w1+w3", 3) == (2, 0, 1)
    assert parse_weight("[1,0,2]", 3) == (1, 0, 2)
    assert parse_weight("0", 4) == (0, 0, 0, 0)
    for bad in ("w5", "[1,2]", "3"):
        with pytest.raises(UsageError):
            parse_weight(bad, 3)


def test_encode_decode():
    data = {"a": [F(1, 3), 2, "x"], "b": {"c": F(-5)}}
    assert decode(json.loads(json.dumps(encode(data)))) == data
    with pytest.raises(TypeError):
        encode(1.5)


weights = st.integers(min_value=0, max_value=9)


@given(st.tuples(weights), st.tuples(weights, weights, weights))
def test_label_round_trip_f4(a, b):
    spec = f4()
    lab = ModuleLabel(F(0), (a, b))
    assert parse_label(format_label(lab), spec) == lab


@given(st.fractions(min_value=-5, max_value=5, max_denominator=4), st.tuples(weights, weights), st.tuples(weights))
def test_label_round_trip_charged(q, a, b):
    spec = sl_mn(3, 2)
    lab = ModuleLabel(q, (a, b))
    assert parse_label(format_label(lab), spec) == lab


def test_label_needs_one_weight_per_factor():
    with pytest.raises(UsageError):
        parse_label("(1,2,3)", spo23())
    with pytest.raises(UsageError):
        parse_label("1,2", spo23())
