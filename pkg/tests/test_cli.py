import csv
import io
import json
import subprocess
import sys

import pytest

from crossnum.bounds import E
from crossnum.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_crossings_expect(capsys):
    assert run(capsys, "crossings", "K24", "--expect", "3699")[0] == 0
    code, out, _ = run(capsys, "crossings", "K24", "--expect", "3700")
    assert code == 1 and "3699" in out


def test_crossings_both_methods(capsys):
    code, out, _ = run(capsys, "crossings", "W4", "--method", "both", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and {r["crossings"] for r in rows} == {153}


def test_point_file(capsys, tmp_path):
    f = tmp_path / "pts.txt"
    f.write_text("0 0\n4 0\n5 3\n2 5\n-1 3\n")
    code, out, _ = run(capsys, "crossings", str(f), "--format", "csv", "--no-timing")
    assert code == 0
    assert list(csv.DictReader(io.StringIO(out)))[0]["crossings"] == "5"


def test_input_errors(capsys, tmp_path):
    assert run(capsys, "crossings", str(tmp_path / "missing.txt"))[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("0 0\n1 1\n2 2\n")
    code, _, err = run(capsys, "crossings", str(bad))
    assert code == 2 and err.startswith("error:")
    with pytest.raises(SystemExit) as exc:
        main(["nonsense-verb"])
    assert exc.value.code == 2


def test_global_flags_after_verb(capsys):
    a = run(capsys, "--format", "csv", "--no-timing", "crossings", "K24")[1]
    b = run(capsys, "crossings", "K24", "--format", "csv", "--no-timing")[1]
    assert a == b


def test_bounds_decimal_column(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "12", "--k", "5", "--format", "json")
    (row,) = json.loads(out)
    assert code == 0 and row["B"] == "48" and row["E"] == 4
    assert row["B_decimal"] == "48.000000"


def test_bounds_sweep(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "30", "--sweep", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [int(r["k"]) for r in rows] == list(range(1, 15))
    # the digraph count only exists for n/3 < k
    assert [r["k"] for r in rows if r["E"] != "-"] == ["11", "12", "13", "14"]
    assert rows[10]["E"] == str(E(11, 30))


def test_qstar(capsys):
    code, out, _ = run(capsys, "qstar", "--m", "315", "--cr", "152210640", "--decimal", "6", "--format", "json")
    (row,) = json.loads(out)
    assert code == 0 and row["qstar_bound"] == "83247328/218791125"
    assert row["qstar_bound_decimal"] == "0.380488"


def test_ledger(capsys):
    code, out, _ = run(capsys, "ledger", "--m", "5", "--cr", "5", "--steps", "2", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [r["predicted"] for r in rows] == ["5", "130", "2755"]


def test_ksets_and_decompose(capsys):
    code, out, _ = run(capsys, "ksets", "K24", "--k", "9", "--partition", "wings", "--format", "json")
    (row,) = json.loads(out)
    assert code == 0 and row["chi_leq_k"] == 138 and row["bichromatic"] == 132
    code, out, _ = run(capsys, "decompose", "K24", "--partition", "wings", "--format", "json")
    assert code == 0 and json.loads(out)[0]["decomposable"] is True


def test_construct_and_synth(capsys, tmp_path):
    assert run(capsys, "construct", "K33", "--expect", "14634")[0] == 0
    assert run(capsys, "construct", "K33", "--expect", "1")[0] == 1
    out_file = tmp_path / "k33.txt"
    code, _, _ = run(capsys, "synth", "K33", "--out", str(out_file), "--check")
    assert code == 0 and out_file.exists()
    code, out, _ = run(capsys, "crossings", str(out_file), "--format", "json")
    assert json.loads(out)[0]["crossings"] == 14634


def test_double(capsys, tmp_path):
    f = tmp_path / "pent.txt"
    f.write_text("0 0\n4 0\n5 3\n2 5\n-1 3\n")
    code, out, _ = run(capsys, "double", str(f), "--synth", "--format", "json")
    assert code == 0
    assert json.loads(out)[0]["predicted"] == 130


def test_catalog_verbs(capsys, tmp_path):
    code, out, _ = run(capsys, "catalog", "list", "--format", "csv")
    assert code == 0 and out.startswith("name,kind,n,expected")
    assert run(capsys, "catalog", "verify", "K42")[0] == 0
    dest = tmp_path / "k42.txt"
    assert run(capsys, "catalog", "export", "K42", str(dest))[0] == 0
    code, out, _ = run(capsys, "crossings", str(dest), "--expect", "40593")
    assert code == 0


def test_reproduce_table_csv(capsys):
    code, out, _ = run(capsys, "reproduce-table", "--only", "24", "33", "--format", "csv", "--no-timing")
    assert code == 0
    assert out.splitlines() == ["n,expected,computed,status", "24,3699,3699,OK", "33,14634,14634,OK"]


def test_deterministic_without_timing(capsys):
    a = run(capsys, "reproduce-table", "--only", "24", "30", "--no-timing")[1]
    b = run(capsys, "reproduce-table", "--only", "24", "30", "--no-timing")[1]
    assert a == b


def test_entry_point_subprocess():
    res = subprocess.run([sys.executable, "-m", "crossnum.cli", "qstar", "--m", "3", "--cr", "0",
                          "--format", "csv"], capture_output=True, text=True)
    assert res.returncode == 0 and "8/21" in res.stdout
