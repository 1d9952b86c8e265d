"""End-to-end plot-script tests against real solver artifacts.

The fixtures call the installed ``viscousfd`` CLI so these tests consume
the primary component exactly the way a user would: through files.
"""

import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

SCRIPTS = Path(__file__).resolve().parents[1]


def run_script(name, *args):
    return subprocess.run(
        [sys.executable, str(SCRIPTS / name), *args],
        capture_output=True, text=True)


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "viscousfd.cli", *args],
        capture_output=True, text=True)


@pytest.fixture(scope="module")
def spectral_csv(tmp_path_factory):
    out = tmp_path_factory.mktemp("spectral") / "spectral.csv"
    proc = run_cli("analyze", "--schemes", "alpha6,shen6,alpha4",
                   "--samples", "128", "--output", str(out))
    assert proc.returncode == 0, proc.stderr
    return out


@pytest.fixture(scope="module")
def shock_snapshot(tmp_path_factory):
    outdir = tmp_path_factory.mktemp("run")
    cfg = outdir / "run.cfg"
    cfg.write_text("nx = 64\nny = 32\nRe = 500\nt_end = 0\n")
    proc = run_cli("run", str(cfg), "--output-dir", str(outdir), "--quiet")
    assert proc.returncode == 0, proc.stderr
    return outdir / "snapshot_t0.000000.csv"


class TestPlotSpectral:
    def test_renders_figure(self, spectral_csv, tmp_path):
        out = tmp_path / "operator.png"
        proc = run_script("plot_spectral.py", "--input", str(spectral_csv),
                          "--output", str(out))
        assert proc.returncode == 0, proc.stderr
        assert out.exists() and out.stat().st_size > 1000

    def test_csv_carries_the_qualitative_content(self, spectral_csv):
        # the curve data behind the figure: the gradient-interpolation
        # scheme touches zero at Nyquist, the damping schemes do not
        lines = spectral_csv.read_text().splitlines()
        names = lines[0].split(",")
        last = [float(tok) for tok in lines[-1].split(",")]
        row = dict(zip(names, last))
        assert row["theta"] == pytest.approx(np.pi, rel=1e-12)
        assert abs(row["shen6"]) <= 1e-12
        assert -row["alpha6"] >= 1.0
        assert -row["alpha4"] >= 1.0
        assert -row["exact"] == pytest.approx(np.pi**2, rel=1e-12)

    def test_empty_csv_diagnosed(self, tmp_path):
        empty = tmp_path / "empty.csv"
        empty.write_text("theta,exact\n")
        proc = run_script("plot_spectral.py", "--input", str(empty),
                          "--output", str(tmp_path / "x.png"))
        assert proc.returncode == 2
        assert "no samples" in proc.stderr


class TestPlotContours:
    def test_initial_shock_tube_renders(self, shock_snapshot, tmp_path):
        out = tmp_path / "density.png"
        proc = run_script("plot_contours.py", "--input", str(shock_snapshot),
                          "--output", str(out), "--levels", "38")
        assert proc.returncode == 0, proc.stderr
        assert out.exists() and out.stat().st_size > 1000

    def test_uniform_density_degenerate_range(self, tmp_path):
        rows = ["# nx=4 ny=3 time=0.0 gamma=1.4", "# x,y,rho,u,v,p"]
        for i in range(3):
            for j in range(4):
                rows.append(f"{0.125 + 0.25 * j},{0.125 + 0.25 * i},"
                            "2.5,0,0,1")
            # uniform field: a single contour level, no crash
        csv = tmp_path / "uniform.csv"
        csv.write_text("\n".join(rows) + "\n")
        out = tmp_path / "uniform.png"
        proc = run_script("plot_contours.py", "--input", str(csv),
                          "--output", str(out))
        assert proc.returncode == 0, proc.stderr
        assert out.exists()

    def test_missing_column_named(self, tmp_path):
        csv = tmp_path / "broken.csv"
        csv.write_text("# nx=2 ny=1 time=0.0 gamma=1.4\n"
                       "0.25,0.5,1.0,0.0,0.0\n"
                       "0.75,0.5,1.0,0.0,0.0\n")
        proc = run_script("plot_contours.py", "--input", str(csv),
                          "--output", str(tmp_path / "x.png"))
        assert proc.returncode == 2
        assert "'p'" in proc.stderr

    def test_row_count_mismatch_diagnosed(self, tmp_path):
        csv = tmp_path / "short.csv"
        csv.write_text("# nx=4 ny=3 time=0.0 gamma=1.4\n"
                       "0.1,0.1,1,0,0,1\n")
        proc = run_script("plot_contours.py", "--input", str(csv),
                          "--output", str(tmp_path / "x.png"))
        assert proc.returncode == 2
        assert "expected 12 rows" in proc.stderr

    def test_level_count_validated(self, shock_snapshot, tmp_path):
        proc = run_script("plot_contours.py", "--input", str(shock_snapshot),
                          "--output", str(tmp_path / "x.png"),
                          "--levels", "1")
        assert proc.returncode == 2
