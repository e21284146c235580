import json
import math
import subprocess
import sys
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from shellpol.cli import (EXIT_NO_BOUND_STATE, EXIT_OK, EXIT_USAGE,
                          EXIT_VERIFY_FAILED, SWEEP_HEADER, main)


def run(argv):
    return main(argv)


# -- point --------------------------------------------------------------------

def test_point_basic(capsys):
    assert run(["point", "--gamma", "2", "--r0", "3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "0.7968121300200" in out
    assert "alpha_b      absent" in out
    assert "x1           absent" in out


def test_point_no_bound_state(capsys):
    assert run(["point", "--gamma", "1"]) == EXIT_NO_BOUND_STATE
    assert "no bound state" in capsys.readouterr().err


def test_point_with_p_state(capsys):
    assert run(["point", "--gamma", "4"]) == EXIT_OK
    out = capsys.readouterr().out
    x0 = float(out.split("x0")[1].split()[0])
    x1 = float(out.split("x1")[1].split()[0])
    assert x1 < x0


def test_point_json(capsys):
    assert run(["point", "--gamma", "4", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["x1"] < payload["x0"]
    assert payload["E0_joules"] < payload["E1_joules"] < 0.0
    assert payload["alpha"] > 0.0


def test_point_csv_row(tmp_path, capsys):
    out = tmp_path / "row.csv"
    assert run(["point", "--gamma", "2", "--out", str(out)]) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0] == SWEEP_HEADER
    assert lines[1].split(",")[2] == "nan"


def test_point_usage_errors(capsys):
    assert run(["point", "--gamma", "-3"]) == EXIT_USAGE
    assert run(["point"]) == EXIT_USAGE
    assert run(["nonsense"]) == EXIT_USAGE


# -- sweep --------------------------------------------------------------------

def test_sweep_csv_contract(tmp_path):
    out = tmp_path / "sweep.csv"
    assert run(["sweep", "--gamma-start", "1.1", "--gamma-end", "20",
                "--steps", "40", "--out", str(out)]) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0] == SWEEP_HEADER
    assert len(lines) == 41
    rows = [line.split(",") for line in lines[1:]]
    for row in rows:
        ga = float(row[0])
        # x1 and alpha_b absent exactly when |gamma| <= 3
        if ga <= 3.0:
            assert row[2] == "nan" and row[6] == "nan"
        else:
            assert math.isfinite(float(row[2]))
            assert math.isfinite(float(row[6]))
        assert float(row[5]) > float(row[4]) > 0.0   # alpha2 > alpha1


def test_sweep_deterministic(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    args = ["sweep", "--gamma-start", "1.2", "--gamma-end", "8",
            "--steps", "25"]
    assert run(args + ["--out", str(a)]) == EXIT_OK
    assert run(args + ["--out", str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_sweep_units_and_rounding(tmp_path):
    dimless = tmp_path / "d.csv"
    m3 = tmp_path / "m.csv"
    m3r = tmp_path / "mr.csv"
    base = ["sweep", "--gamma-start", "2", "--gamma-end", "4", "--steps", "3"]
    assert run(base + ["--units", "dimensionless", "--out", str(dimless)]) == EXIT_OK
    assert run(base + ["--units", "m3", "--out", str(m3)]) == EXIT_OK
    assert run(base + ["--units", "m3", "--paper-rounding", "--out", str(m3r)]) == EXIT_OK
    a_d = float(dimless.read_text().splitlines()[1].split(",")[3])
    a_m = float(m3.read_text().splitlines()[1].split(",")[3])
    a_r = float(m3r.read_text().splitlines()[1].split(",")[3])
    assert a_m / a_d == pytest.approx(
        8.9875517873681764e9 * 2 * 9.1093837015e-31 * 1.602176634e-19 ** 2
        * (3e-10) ** 4 / 1.054571817e-34 ** 2, rel=1e-12)
    assert a_r / a_m == pytest.approx(9e9 / 8.9875517873681764e9, rel=1e-12)


def test_sweep_svg(tmp_path):
    out = tmp_path / "sweep.csv"
    svg = tmp_path / "sweep.svg"
    assert run(["sweep", "--gamma-start", "1.5", "--gamma-end", "10",
                "--steps", "20", "--out", str(out), "--svg", str(svg),
                "--svg-logy"]) == EXIT_OK
    tree = ET.parse(svg)   # well-formed XML
    assert "svg" in tree.getroot().tag
    assert any("polyline" in el.tag for el in tree.getroot().iter())


def test_sweep_rejects_bad_range(capsys):
    assert run(["sweep", "--gamma-start", "0.5", "--gamma-end", "2"]) == EXIT_USAGE
    assert run(["sweep", "--gamma-start", "2", "--gamma-end", "2"]) == EXIT_USAGE


def test_sweep_failure_cleans_partial_file(tmp_path, monkeypatch):
    out = tmp_path / "sweep.csv"
    import shellpol.cli as cli_mod

    def boom(gamma_abs, args):
        raise RuntimeError("synthetic row failure")

    monkeypatch.setattr(cli_mod, "_row_values", boom)
    assert run(["sweep", "--gamma-start", "1.5", "--gamma-end", "2",
                "--steps", "3", "--out", str(out)]) == EXIT_VERIFY_FAILED
    assert not out.exists()


# -- profile ------------------------------------------------------------------

def test_profile_single_gamma(tmp_path):
    out = tmp_path / "q0.csv"
    assert run(["profile", "--gamma", "2", "--which", "q0",
                "--n-points", "64", "--out", str(out)]) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0] == "rho,value"
    assert len(lines) == 65
    first = lines[1].split(",")
    assert float(first[0]) == 0.0 and float(first[1]) == 0.0


def test_profile_multi_gamma_tightens(tmp_path):
    out = tmp_path / "q0.csv"
    assert run(["profile", "--gamma", "2", "--gamma", "5", "--gamma", "12",
                "--which", "q0", "--n-points", "600", "--out", str(out)]) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0] == "gamma_abs,rho,value"
    data = np.array([[float(v) for v in line.split(",")] for line in lines[1:]])
    widths = []
    peaks = []
    for ga in (2.0, 5.0, 12.0):
        rows = data[data[:, 0] == ga]
        rho, val = rows[:, 1], rows[:, 2] ** 2
        cdf = np.cumsum(val) / val.sum()
        q25 = rho[np.searchsorted(cdf, 0.25)]
        q75 = rho[np.searchsorted(cdf, 0.75)]
        widths.append(q75 - q25)
        peaks.append(rho[np.argmax(val)])
    assert widths[0] > widths[1] > widths[2]
    assert abs(peaks[2] - 1.0) <= abs(peaks[0] - 1.0)


def test_profile_q1_needs_p_state(capsys):
    assert run(["profile", "--gamma", "2", "--which", "q1"]) == EXIT_NO_BOUND_STATE


def test_profile_s(tmp_path):
    out = tmp_path / "s.csv"
    assert run(["profile", "--gamma", "5", "--which", "S",
                "--n-points", "128", "--out", str(out)]) == EXIT_OK
    lines = out.read_text().splitlines()
    vals = [float(l.split(",")[1]) for l in lines[1:]]
    assert vals[0] == 0.0
    assert all(math.isfinite(v) for v in vals)


# -- verify -------------------------------------------------------------------

def test_verify_small_grid(capsys):
    assert run(["verify", "--gamma-grid", "1.5,2,5"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "result: PASS" in out
    assert "FAIL" not in out


def test_verify_json(capsys):
    assert run(["verify", "--gamma-grid", "1.5,2", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True
    names = {c["name"] for c in payload["checks"]}
    assert "alpha-closed-vs-oracle" in names
    assert all(set(c) >= {"name", "passed", "worst", "tolerance", "detail"}
               for c in payload["checks"])


def test_verify_fault_injection(capsys):
    assert run(["verify", "--gamma-grid", "2", "--perturb-coeff", "1e-3"]) \
        == EXIT_VERIFY_FAILED
    out = capsys.readouterr().out
    assert "FAIL" in out
    assert "alpha-closed-vs-oracle" in out


# -- console entry point ------------------------------------------------------

def test_console_script_runs():
    proc = subprocess.run([sys.executable, "-m", "shellpol.cli", "point",
                           "--gamma", "2"], capture_output=True, text=True)
    assert proc.returncode == EXIT_OK
    assert "alpha" in proc.stdout
