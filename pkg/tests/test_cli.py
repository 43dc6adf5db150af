import json
import subprocess
import sys

import pytest

from qzeta import cli
from qzeta.cli import run


def run_out(tmp_path, argv, name="out.csv"):
    path = tmp_path / name
    code = run(argv + ["--out", str(path)])
    return code, cli.read_table(str(path)), path


def test_eval_q_at_zero(tmp_path):
    code, rows, _ = run_out(tmp_path, ["eval", "--fn", "q", "--s", "0", "--a", "0.3"])
    assert code == 0
    assert float(rows[0]["re"]) == pytest.approx(-0.5, abs=1e-12)
    assert float(rows[0]["im"]) == 0.0
    assert rows[0]["error_kind"] == ""


def test_eval_pole_is_an_error_record(tmp_path):
    code, rows, _ = run_out(tmp_path, ["eval", "--fn", "q", "--s", "1", "--a", "0.3"])
    assert code == 1
    assert rows[0]["error_kind"] == "pole" and rows[0]["error_message"]


def test_eval_xi_real_on_axis(tmp_path):
    code, rows, _ = run_out(tmp_path, ["eval", "--fn", "xi", "--s", "0.5", "--a", "0.25"])
    assert code == 0 and abs(float(rows[0]["im"])) <= 1e-11


def test_eval_many_points_and_functions(tmp_path):
    argv = ["eval", "--fn", "hurwitz", "--s", "2", "--s", "0.5+14i", "--a", "1", "--a", "0.5"]
    code, rows, _ = run_out(tmp_path, argv)
    assert code == 0 and len(rows) == 4
    assert float(rows[0]["re"]) == pytest.approx(1.6449340668482264, rel=1e-12)
    for fn in ("li", "z", "p"):
        assert run_out(tmp_path, ["eval", "--fn", fn, "--s", "2", "--a", "0.25"])[0] == 0


def test_domain_error_record(tmp_path):
    code, rows, _ = run_out(tmp_path, ["eval", "--fn", "q", "--s", "2", "--a", "0.7"])
    assert code == 1 and rows[0]["error_kind"] == "domain"


def test_json_mirrors_csv(tmp_path):
    argv = ["eval", "--fn", "q", "--s", "2", "--s=-1.5+2i", "--a", "0.3"]
    _, csv_rows, _ = run_out(tmp_path, argv)
    _, json_rows, _ = run_out(tmp_path, argv + ["--format", "json"], name="out.json")
    assert list(json_rows[0].keys()) == list(csv_rows[0].keys())
    for c, j in zip(csv_rows, json_rows):
        # repr floats make the CSV round trip bit-exact
        assert float(c["re"]) == j["re"] and float(c["im"]) == j["im"]


def test_scan_cache_dedupes_and_is_idempotent(tmp_path):
    cache = tmp_path / "zeros.csv"
    base = ["scan", "--a", "0.3", "--t0", "0", "--t1", "20", "--cache", str(cache)]
    assert run(base + ["--out", str(tmp_path / "a.csv")]) == 0
    first = cache.read_text()
    assert run(base + ["--out", str(tmp_path / "b.csv")]) == 0
    assert cache.read_text() == first
    wider = ["scan", "--a", "0.3", "--t0", "10", "--t1", "30", "--cache", str(cache), "--out", str(tmp_path / "c.csv")]
    assert run(wider) == 0
    rows = cli.read_zero_cache(str(cache))
    ts = [r["t"] for r in rows]
    assert ts == sorted(ts) and len(ts) == len(set(round(t, 7) for t in ts))
    assert min(ts) < 10 < 20 < max(ts)
    for r in rows:
        cli.zero_record_from_row(r).validate()
        assert r["engine_version"] == cli.__version__


def test_merge_zero_cache_tolerance():
    a = [dict(a=0.3, t=1.0), dict(a=0.3, t=2.0)]
    b = [dict(a=0.3, t=1.0 + 5e-9), dict(a=0.2, t=1.0)]
    merged = cli.merge_zero_cache(a, b)
    assert [(r["a"], r["t"]) for r in merged] == [(0.2, 1.0), (0.3, 1.0), (0.3, 2.0)]


def test_scan_output_round_trips(tmp_path):
    code, rows, _ = run_out(tmp_path, ["scan", "--a", "0.3", "--t1", "25", "--format", "json"], name="z.json")
    assert code == 0 and rows
    for r in rows:
        cli.zero_record_from_row(r).validate()


def test_count_and_density(tmp_path):
    code, rows, _ = run_out(tmp_path, ["count", "--a", "0.5", "--T", "30"])
    assert code == 0
    assert int(rows[0]["n_nonreal"]) == 20 and int(rows[0]["n_real"]) == 2
    code, rows, _ = run_out(tmp_path, ["count", "--a", "0.3", "--T", "300", "--no-scan"])
    assert code == 1 and rows[0]["error_kind"] == "domain"
    code, rows, _ = run_out(tmp_path, ["density-plot", "--a", "0.3", "--T-max", "20", "--n", "2"])
    assert code == 0 and [float(r["T"]) for r in rows] == [10.0, 20.0]
    assert all(int(r["count"]) >= int(r["line_count"]) for r in rows)


def test_decompose_theta_a0(tmp_path):
    code, rows, _ = run_out(tmp_path, ["decompose", "--r", "2", "--q", "7"])
    assert code == 0 and len(rows) == 4
    assert max(float(r["residual"]) for r in rows) <= 1e-9
    code, rows, _ = run_out(tmp_path, ["decompose", "--r", "2", "--q", "4"])
    assert code == 1 and rows[0]["error_kind"] == "domain"
    code, rows, _ = run_out(tmp_path, ["theta", "--a", "0.3", "--n", "5", "--sigma", "0.5", "--t", "0", "2"])
    assert code == 0 and len(rows) == 7
    assert max(float(r["residual"]) for r in rows) <= 1e-8
    code, rows, _ = run_out(tmp_path, ["a0"])
    assert code == 0 and abs(float(rows[0]["a0"]) - 0.1183751396) <= 1e-6
    code, rows, _ = run_out(tmp_path, ["a0", "--lo", "0.2"])
    assert code == 1 and rows[0]["error_kind"] == "bracket"


def test_windows_union_table(tmp_path):
    code, rows, _ = run_out(tmp_path, ["windows", "--a", "0.3", "--t0", "20", "--t1", "23"])
    assert code == 0 and {r["record"] for r in rows} == {"window"}
    assert all(float(r["j"]) >= float(r["i_abs"]) - float(r["quad_err"]) for r in rows)
    code, rows, _ = run_out(tmp_path, ["windows", "--a", "0.3", "--t0", "0", "--t1", "2"])
    assert code == 1 and rows[0]["error_kind"] == "domain"


def test_fe_check_seeded_runs_are_byte_identical(tmp_path):
    argv = ["fe-check", "--a", "0.3", "--random", "15", "--seed", "4"]
    run(argv + ["--out", str(tmp_path / "x.csv")])
    run(argv + ["--out", str(tmp_path / "y.csv")])
    assert (tmp_path / "x.csv").read_bytes() == (tmp_path / "y.csv").read_bytes()
    run(["fe-check", "--a", "0.3", "--random", "15", "--seed", "5", "--out", str(tmp_path / "z.csv")])
    assert (tmp_path / "z.csv").read_bytes() != (tmp_path / "x.csv").read_bytes()
    rows = cli.read_table(str(tmp_path / "x.csv"))
    assert float(rows[0]["max_residual"]) <= 1e-8 and int(rows[0]["n_points"]) == 15


def test_threads_env_override(monkeypatch):
    args = cli.build_parser().parse_args(["scan", "--a", "0.3", "--t1", "5", "--workers", "3"])
    assert cli._workers(args) == 3
    monkeypatch.setenv("QZETA_THREADS", "2")
    assert cli._workers(args) == 2
    monkeypatch.setenv("QZETA_THREADS", "zero")
    with pytest.raises(SystemExit):
        cli._workers(args)


def test_parse_complex():
    assert cli.parse_complex("0.5+14i") == complex(0.5, 14)
    assert cli.parse_complex("-1.5+2j") == complex(-1.5, 2)
    assert cli.parse_complex("2") == 2


def test_console_entry_point(tmp_path):
    out = subprocess.run(
        [sys.executable, "-m", "qzeta.cli", "eval", "--s", "2", "--a", "0.5", "--format", "json"],
        check=True, capture_output=True, text=True,
    )
    rows = json.loads(out.stdout)
    assert rows[0]["re"] == pytest.approx(4.112335167120566, rel=1e-12)
