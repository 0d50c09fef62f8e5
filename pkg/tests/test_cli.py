import csv
import io
import json
import subprocess
import sys

import pytest

from knotstab import cli
from knotstab.errors import InvariantViolation
from knotstab.polyring import IntPoly
from knotstab.report import zero_rows, zeros_csv
from knotstab.stability import numeric_zeros
from knotstab.sweeps import COLUMNS, SweepSpec, resolve_threads, run_sweep


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# classify


def test_classify_cf(capsys):
    code, out, _ = run(capsys, "classify", "--cf", "[2,-2,-8,2]")
    d = json.loads(out)
    assert code == 0
    assert d["verdict"] == "Stable"
    assert IntPoly.from_text(d["polynomial"]) == IntPoly.from_text("2,-5,2") ** 2
    assert d["input"] == {"kind": "cf", "text": "[2,-2,-8,2]"}


def test_classify_poly(capsys):
    code, out, _ = run(capsys, "classify", "--poly", "1,-3,1")
    d = json.loads(out)
    assert code == 0 and d["verdict"] == "Stable"
    assert sorted(round(z[0], 3) for z in d["zeros"]) == [0.382, 2.618]
    assert all(z[1] == 0 for z in d["zeros"])


def test_classify_matrix(capsys):
    code, out, _ = run(capsys, "classify", "--matrix", "1,1;0,-1")
    d = json.loads(out)
    assert code == 0 and d["verdict"] == "Stable" and d["signature"] == 0


def test_classify_csv(capsys):
    code, out, _ = run(capsys, "classify", "--poly", "1,-1,1", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and rows[0]["verdict"] == "CStable"


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "classify", "--poly", "1,x,3")
    assert code == 2 and "parse error" in err
    code, _, _ = run(capsys, "classify", "--cf", "[2,3]")
    assert code == 2
    code, _, _ = run(capsys, "classify")
    assert code == 2


def test_cap_exit_code(capsys):
    code, _, err = run(capsys, "sweep", "--family", "cf_enum", "--max-len", "6", "--max-coef", "6", "--cap", "10")
    assert code == 3 and "cap" in err


def test_invariant_exit_code(capsys, monkeypatch):
    def broken(*a, **k):
        raise InvariantViolation("forced")

    monkeypatch.setattr(cli, "classify", broken)
    code, _, err = run(capsys, "classify", "--poly", "1,-3,1")
    assert code == 4 and "forced" in err


def test_entry_point_runs():
    res = subprocess.run([sys.executable, "-m", "knotstab.cli", "classify", "--poly", "1,-3,1"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["verdict"] == "Stable"


# sweeps


def test_sweep_csv_header(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "xn", "--range", "1:3", "--format", "csv", "--threads", "1")
    assert code == 0
    assert out.splitlines()[0] == ",".join(COLUMNS)


def test_sweep_vertical_table(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "appc_vertical", "--range", "-4:8", "--threads", "1")
    rows = json.loads(out)
    got = {int(r["id"].split("_")[1]): (r["verdict"], r["n_real"], r["n_unit"]) for r in rows}
    for k in (-4, -3, -2, -1):
        assert got[k] == ("StrictlyBiStable", 2, 6)
    for k in (1, 2):
        assert got[k][0] == "TotallyUnstable"
    for k in (3, 4, 5, 6):
        assert got[k] == ("Mixed", 0, 4)
    for k in (7, 8):
        assert got[k][0] == "CStable"


def test_sweep_xn_delta(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "xn", "--range", "1:8", "--threads", "1")
    rows = json.loads(out)
    assert abs(float(rows[3]["delta_max"]) - 10.193) < 1e-3
    assert [r["id"] for r in rows] == [f"X_{n}" for n in range(1, 9)]


def test_small_cf_sweep_hoste():
    rows = run_sweep(SweepSpec("cf_enum", 3, 6), threads=1)
    assert len(rows) == 6 + 36 + 216
    assert all(r["hoste_ok"] for r in rows)
    for r in rows:
        p = IntPoly.from_text(r["polynomial"])
        if p.degree:
            assert all(-3 < z.real < 6 for z in numeric_zeros(p))


@pytest.mark.parametrize("family", ["salem", "montesinos", "yn", "appc_horizontal"])
def test_sweep_is_thread_independent(family):
    spec = SweepSpec(family, lo=1, hi=4, max_coef=4)
    assert run_sweep(spec, threads=1) == run_sweep(spec, threads=2)


def test_threads_env_override(monkeypatch):
    monkeypatch.setenv("KNOTSTAB_THREADS", "3")
    assert resolve_threads(1) == 3
    monkeypatch.delenv("KNOTSTAB_THREADS")
    assert resolve_threads(2) == 2
    assert resolve_threads(0) >= 1


def test_byte_identical_reruns(tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"run{i}.csv"
        assert cli.main(["sweep", "--family", "salem", "--range", "1:5", "--format", "csv", "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


# zero export


def test_export_zeros_poly(tmp_path):
    path = tmp_path / "z.csv"
    assert cli.main(["export-zeros", "--poly", "1,-3,1", "--format", "csv", "--out", str(path)]) == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "re,im,label"
    rows = list(csv.DictReader(io.StringIO(path.read_text())))
    assert len(rows) == 2 and all(float(r["im"]) == 0 for r in rows)


def test_export_zeros_vertical(tmp_path):
    path = tmp_path / "z.csv"
    assert cli.main(["export-zeros", "--family", "appc_vertical", "--range", "1:8", "--format", "csv", "--out", str(path)]) == 0
    rows = list(csv.DictReader(io.StringIO(path.read_text())))
    assert len(rows) == 64
    # the family clusters around the unit circle
    assert sum(1 for r in rows if 0.4 < abs(complex(float(r["re"]), float(r["im"]))) < 2.5) >= 48


def test_export_zeros_g3(capsys):
    code, out, _ = run(capsys, "export-zeros", "--family", "xn", "--range", "3:3")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 6
    got = sorted(r["re"] for r in rows)
    for a, b in zip(got, [0.145, 0.458, 0.578, 1.730, 2.186, 6.904]):
        assert abs(a - b) < 1e-3


def test_zero_rows_deterministic():
    items = [("a", IntPoly.from_text("1,-7,13,-7,1"))]
    assert zeros_csv(zero_rows(items)) == zeros_csv(zero_rows(items))


# report


def test_report_writes_files(tmp_path, capsys):
    code, out, _ = run(capsys, "report", "--family", "appc_vertical", "--range", "1:4", "--out", str(tmp_path / "r"))
    assert code == 0
    listing = json.loads(out)
    assert listing["files"] == ["summary.json", "verdicts.png", "zeros.json", "zeros.png"]
    for name in listing["files"]:
        assert (tmp_path / "r" / name).stat().st_size > 0
    assert (tmp_path / "r" / "zeros.png").read_bytes()[:4] == b"\x89PNG"


def test_report_single_input(tmp_path, capsys):
    code, out, _ = run(capsys, "report", "--cf", "[2,-2]", "--format", "csv", "--out", str(tmp_path))
    assert code == 0 and json.loads(out)["members"] == 1
    assert (tmp_path / "summary.csv").read_text().splitlines()[0] == ",".join(COLUMNS)


def test_report_needs_out(capsys):
    code, _, _ = run(capsys, "report", "--poly", "1,-3,1")
    assert code == 2
