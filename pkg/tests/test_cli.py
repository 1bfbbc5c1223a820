"""Command-line interface: exit codes, file outputs, report formats."""

import os

import numpy as np
import pytest

from hilbertmd.cli import main


def read_csv(path):
    with open(path) as fh:
        lines = [l.strip() for l in fh if l.strip()]
    header = lines[0].split(",")
    rows = [l.split(",") for l in lines[1:]]
    return header, rows


def test_transform_writes_csv_and_figure(tmp_path):
    out = tmp_path / "run.csv"
    rc = main(["transform", "--example", "lorentz_a1", "--method", "md",
               "--n", "30", "--out", str(out)])
    assert rc == 0
    header, rows = read_csv(out)
    assert header == ["x", "H_numeric", "H_exact", "abs_err"]
    assert len(rows) > 100
    assert os.path.exists(tmp_path / "run.pdf")
    errs = [float(r[3]) for r in rows if r[3] not in ("nan", "inf", "-inf")]
    assert max(errs) <= 1e-10


def test_no_plot_skips_the_figure(tmp_path):
    out = tmp_path / "run.csv"
    rc = main(["transform", "--example", "lorentz_a1", "--method", "md",
               "--n", "20", "--out", str(out), "--no-plot"])
    assert rc == 0
    assert not os.path.exists(tmp_path / "run.pdf")


def test_csv_values_have_full_precision(tmp_path):
    out = tmp_path / "run.csv"
    main(["transform", "--example", "lorentz_a1", "--method", "md",
          "--n", "20", "--out", str(out), "--no-plot"])
    _, rows = read_csv(out)
    sample = next(r[1] for r in rows if "e" in r[1])
    mantissa = sample.split("e")[0].replace("-", "").replace(".", "")
    assert len(mantissa) == 17


def test_global_method_transform(tmp_path):
    out = tmp_path / "g.csv"
    rc = main(["transform", "--example", "quartic", "--method", "global",
               "--nf", "64", "--out", str(out), "--no-plot"])
    assert rc == 0
    _, rows = read_csv(out)
    errs = [float(r[3]) for r in rows if r[3] not in ("nan", "inf", "-inf")]
    assert max(errs) <= 1e-10


def test_contour_method_transform(tmp_path):
    out = tmp_path / "c.csv"
    rc = main(["transform", "--example", "osc_quartic", "--method", "contour",
               "--out", str(out), "--no-plot"])
    assert rc == 0
    _, rows = read_csv(out)
    errs = [float(r[3]) for r in rows if r[3] not in ("nan", "inf", "-inf")]
    assert max(errs) <= 1e-11


def test_convergence_sweep(tmp_path):
    out = tmp_path / "sweep.csv"
    rc = main(["convergence", "--example", "lorentz_a1", "--method", "md",
               "--n-list", "10,20,30", "--out", str(out), "--no-plot"])
    assert rc == 0
    header, rows = read_csv(out)
    assert header[0] == "N" and "linf_err" in header
    assert [int(r[0]) for r in rows] == [10, 20, 30]
    errs = [float(r[1]) for r in rows]
    assert errs[-1] <= errs[0]


def test_coeffs_split_method(tmp_path):
    out = tmp_path / "co.csv"
    rc = main(["coeffs", "--example", "lorentz_a2", "--method", "md",
               "--n", "40", "--out", str(out), "--no-plot"])
    assert rc == 0
    # one file per domain
    files = sorted(p for p in os.listdir(tmp_path) if p.endswith(".csv"))
    assert files == ["co_d0.csv", "co_d1.csv"]
    header, rows = read_csv(tmp_path / "co_d0.csv")
    assert header == ["n", "abs_coeff"]
    assert len(rows) == 41


def test_coeffs_global_method(tmp_path):
    out = tmp_path / "cg.csv"
    rc = main(["coeffs", "--example", "quartic", "--method", "global",
               "--nf", "64", "--out", str(out), "--no-plot"])
    assert rc == 0
    header, rows = read_csv(out)
    assert header == ["n", "abs_a_n"]
    assert len(rows) == 64


def test_soliton_run_reports_profile_and_error_column(tmp_path):
    out = tmp_path / "sol.csv"
    rc = main(["soliton", "--m", "2", "--n", "40", "--out", str(out),
               "--no-plot"])
    assert rc == 0
    header, rows = read_csv(out)
    assert header[:4] == ["domain", "node_coordinate", "xi", "Q"]
    assert "abs_err_exact" in header
    errs = [float(r[-1]) for r in rows]
    assert max(errs) <= 1e-10


def test_custom_breakpoints_override(tmp_path):
    out = tmp_path / "bp.csv"
    rc = main(["transform", "--example", "gauss", "--method", "md",
               "--n", "60", "--breakpoints=-8,8", "--out", str(out),
               "--no-plot"])
    assert rc == 0


def test_usage_errors_exit_one(tmp_path):
    assert main(["transform", "--example", "nope", "--no-plot",
                 "--out", str(tmp_path / "x.csv")]) == 1
    assert main(["transform", "--example", "lorentz_a1", "--method", "global",
                 "--nf", "25", "--no-plot", "--out", str(tmp_path / "y.csv")]) == 1
    assert main(["soliton", "--m", "2", "--n", "41", "--no-plot",
                 "--out", str(tmp_path / "z.csv")]) == 1


def test_numerical_failures_exit_two(tmp_path):
    rc = main(["soliton", "--m", "3", "--n", "60", "--max-iter", "2",
               "--out", str(tmp_path / "s.csv"), "--no-plot"])
    assert rc == 2


def test_selftest_passes(tmp_path):
    assert main(["selftest", "--out", str(tmp_path) + os.sep, "--no-plot"]) == 0


def test_preset_listing_and_run(tmp_path, capsys):
    assert main(["preset", "--list"]) == 0
    listed = capsys.readouterr().out
    assert "lorentz-a1-md" in listed
    rc = main(["preset", "lorentz-a1-md", "--out", str(tmp_path) + os.sep,
               "--no-plot"])
    assert rc == 0
    assert any(p.endswith(".csv") for p in os.listdir(tmp_path))
    assert main(["preset", "unknown-name"]) == 1
