import json
import subprocess
import sys
from pathlib import Path

from ribbon_llt.cli import main

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_qlr_worked_tuple(capsys):
    code, out, _ = run(capsys, "qlr", "--tuple", str(DATA / "worked_tuple.json"), "--lambda", "4,3,1")
    assert code == 0
    assert json.loads(out)["text"] == "q^4 + 2*q^5"
    code, out, _ = run(capsys, "qlr", "--tuple", str(DATA / "worked_tuple.json"), "--lambda", "4,3,1",
                       "--format", "text")
    assert out.strip() == "q^4 + 2*q^5"


def test_qlr_oracle_route(capsys):
    code, out, _ = run(capsys, "llt", "qlr", "--tuple", str(DATA / "worked_tuple.json"), "--lambda", "4,3,1",
                       "--oracle", "--format", "text")
    assert code == 0 and out.strip() == "q^4 + 2*q^5"


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "--word", "2,1", "--k", "3")
    assert code == 0
    res = json.loads(out)
    assert res["rep"] == [1, 2] and res["power"] == 1
    code, out, _ = run(capsys, "nf", "--word", "1,1")
    assert json.loads(out)["zero"] is True


def test_core_quot(capsys):
    code, out, _ = run(capsys, "core-quot", "--partition", "3,1", "--k", "1")
    assert code == 0 and json.loads(out)["core"] == []


def test_equal(capsys):
    code, out, _ = run(capsys, "equal", "--lhs", "1,9,5", "--rhs", "9,1,5", "--algebra", "rot-le")
    assert code == 0 and json.loads(out)["equal"] is True


def test_act(capsys):
    code, out, _ = run(capsys, "act", "--tuple", "1/1,1/2,1", "--word", "8,3,4,1,2,7,5")
    assert code == 0 and json.loads(out)["result"] == [[2], [3, 2], [3, 3]]


def test_rsst_commands(capsys):
    code, out, _ = run(capsys, "rsst", "sqread", "--tableau", str(DATA / "arrow_tableau.json"), "--format", "text")
    assert code == 0
    assert out.strip() == "15 12 13 10 5 11 20 6 3 18 19 4 1 16 17 26 25 32 31 34 33 36"
    code, out, _ = run(capsys, "rsst", "enumerate", "--shape", "4,3,1", "--contents", "1,2,3,4,4,5,7,8")
    assert code == 0 and json.loads(out)["count"] >= 3


def test_verify_main_single(capsys):
    code, out, _ = run(capsys, "verify-main", "--lambda", "2,2,2", "--flags", "6,6")
    assert code == 0 and json.loads(out)["status"] == "ok"


def test_verify_equal_columns(capsys):
    code, out, _ = run(capsys, "ncsf", "verify-lemma", "--a", "1", "--m", "2", "--x", "3")
    assert code == 0
    code, _, err = run(capsys, "ncsf", "verify-lemma", "--a", "1", "--m", "3", "--x", "3")
    assert code == 2 and "hypothesis" in err


def test_conjecture_single_and_bad(capsys):
    code, out, _ = run(capsys, "conjecture", "--m", "1", "--x", "2", "--y", "5", "--n", "1", "--a", "1")
    assert code == 0 and json.loads(out)["holds"] is True
    code, _, err = run(capsys, "conjecture", "--m", "3", "--x", "2", "--a", "1")
    assert code == 2


def test_usage_errors(capsys):
    assert run(capsys, "nf", "--word", "a,b")[0] == 2
    assert run(capsys, "nf")[0] == 2
    assert run(capsys, "nf", "--word", "1", "--k", "0")[0] == 2
    assert run(capsys, "qlr", "--tuple", "/nonexistent.json")[0] == 2


def test_guard_exit(capsys, monkeypatch):
    monkeypatch.setenv("LLT_SCHUR_GUARD_CLASS", "10")
    code, _, err = run(capsys, "class", "--word", "1,5,9,13")
    assert code == 3 and "guard" in err


def test_golden_command(capsys):
    code, out, _ = run(capsys, "golden")
    assert code == 0 and json.loads(out)["failed"] == []


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ribbon_llt", "nf", "--word", "5,1", "--format", "text"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip()
