import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

from matroid_chern.cli import approx, run
from matroid_chern.corpus import builtin
from matroid_chern.serialize import dumps, loads


def call(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def json_lines(text):
    return [json.loads(line) for line in text.splitlines()]


def test_table_pg28():
    code, out, _ = call(["table"])
    assert code == 0
    rows = {row[0]: row for row in list(csv.reader(io.StringIO(out)))[1:]}
    assert len(rows) == 13
    assert rows["PG(2,8)"][1:4] == ["1323", "441", "3"]
    assert rows["U_{3,7}"][3:] == ["8/5", "1.60"]
    assert rows["non-Pappus"][3:] == ["28/13", "2.15"]
    assert rows["U_{3,3}"][3:] == ["-", "-"]


def test_table_stable():
    assert call(["table"])[1] == call(["table"])[1]


def test_table_json():
    rows = json_lines(call(["table", "--format", "json"])[1])
    assert rows[5] == {"name": "PG(2,2)", "c1sq": 9, "c2": 3, "ratio": "3"}


def test_chern_uniform():
    code, out, _ = call(["chern", "--uniform", "3", "9"])
    assert code == 0
    assert [(r["value"], r["method"]) for r in json_lines(out)] == [(36, "closed_form"),
                                                                   (21, "closed_form")]


def test_chern_file_engine(tmp_path):
    path = tmp_path / "braid.json"
    path.write_text(dumps(builtin("braid")))
    code, out, _ = call(["chern", "--file", str(path), "--engine"])
    assert code == 0
    assert json_lines(out) == [{"exponents": [2, 0], "value": 5, "method": "intersection"},
                               {"exponents": [0, 1], "value": 2, "method": "intersection"}]


def test_chern_rank4_falls_back_to_engine():
    code, out, _ = call(["chern", "--builtin", "u-4-6", "--exponents", "3,0,0"])
    assert json_lines(out) == [{"exponents": [3, 0, 0], "value": -8, "method": "closed_form"}]
    code, out, _ = call(["chern", "--builtin", "u-4-6", "--exponents", "3,0,0", "--engine"])
    assert json_lines(out)[0]["value"] == -8


def test_bad_exponents():
    code, _, err = call(["chern", "--builtin", "fano", "--exponents", "1,1"])
    assert code == 1 and "exponents" in err


def test_malformed_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"n": 4, "rank": 3,\n "kind": "rank2flats", "data": [[0, 1]]}')
    code, _, err = call(["invariants", "--file", str(path)])
    assert code == 1 and "error" in err
    path.write_text('{"n": 4\n "rank": 3}')
    code, _, err = call(["invariants", "--file", str(path)])
    assert code == 1 and "line 2" in err


def test_missing_file():
    assert call(["construct", "--file", "/nonexistent/m.json"])[0] == 1


def test_unknown_builtin():
    assert call(["construct", "--builtin", "nope"])[0] == 1


def test_usage_error():
    assert call(["chern"])[0] == 1


def test_construct_round_trip():
    code, out, _ = call(["construct", "--builtin", "pappus"])
    assert loads(out).canonical_form() == builtin("pappus").canonical_form()


def test_invariants():
    doc = json.loads(call(["invariants", "--builtin", "fano"])[1])
    assert doc["char_poly"] == [1, -7, 14, -8] and doc["beta"] == 3
    assert doc["chern"] == {"c1sq": 9, "c2": 3} and doc["melchior_gap"] == -3


def test_csm():
    doc = json.loads(call(["csm", "--builtin", "u-3-4", "--k", "0"])[1])
    assert doc == {"k": 0, "weights": [{"chain": [], "w": 1}]}


def test_verify_fano():
    code, out, _ = call(["verify", "--builtin", "fano"])
    reports = json_lines(out)
    assert code == 0
    assert [r["theorem"] for r in reports] == ["positivity", "uniform_bounds", "ratio_bounds"]
    assert reports[2]["equality_case"] == "right"


def test_verify_sweep_with_conjecture():
    code, out, _ = call(["verify", "--n", "6", "--conjecture"])
    reports = json_lines(out)
    assert code == 0
    assert all(r["holds"] for r in reports)
    assert any(r["theorem"] == "uniform_conjecture" for r in reports)


def test_verify_rejects_rank4():
    assert call(["verify", "--uniform", "4", "6"])[0] == 1


def test_verify_exit_code_on_violation(monkeypatch):
    from matroid_chern import cli
    from matroid_chern.analysis import TheoremReport
    monkeypatch.setattr(cli, "verify_all", lambda M: [TheoremReport("positivity", False)])
    assert call(["verify", "--builtin", "fano"])[0] == 2


def test_geography_out(tmp_path):
    path = tmp_path / "g.csv"
    code, out, _ = call(["geography", "--n", "5", "--out", str(path)])
    assert code == 0 and out == ""
    assert path.read_text().startswith("n,c1sq,c2,classes,witness\n")


def test_geography_json():
    rows = json_lines(call(["geography", "--n", "4", "--format", "json"])[1])
    assert {(r["c1sq"], r["c2"]) for r in rows} >= {(1, 1)}


def test_geography_gate():
    assert call(["geography", "--n", "12"])[0] == 1


def test_approx():
    assert approx(Fraction(4, 3)) == "1.33"
    assert approx(Fraction(12, 7)) == "1.71"
    assert approx(Fraction(1, 200)) == "0.01"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "matroid_chern", "chern", "--pg2", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert [r["value"] for r in json_lines(proc.stdout)] == [9, 3]
