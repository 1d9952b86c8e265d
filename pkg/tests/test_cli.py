"""Command-line interface contracts: commands, outputs, exit codes."""

import numpy as np
import pytest

from viscousfd import cli
from viscousfd.gas import PositivityError


def write_config(tmp_path, text):
    path = tmp_path / "run.cfg"
    path.write_text(text)
    return str(path)


class TestRunCommand:
    def test_t_end_zero_exits_clean(self, tmp_path, capsys):
        cfg = write_config(tmp_path, "nx=16\nny=16\nRe=500\nt_end=0\n")
        code = cli.main(["run", cfg, "--output-dir", str(tmp_path / "out")])
        assert code == 0
        assert (tmp_path / "out" / "snapshot_t0.000000.csv").exists()
        assert "status=completed" in capsys.readouterr().out

    def test_quiet_suppresses_summary(self, tmp_path, capsys):
        cfg = write_config(tmp_path, "nx=16\nny=16\nRe=500\nt_end=0\n")
        assert cli.main(["run", cfg, "--output-dir", str(tmp_path / "o"),
                         "--quiet"]) == 0
        assert capsys.readouterr().out == ""

    def test_viscous_override_revalidates(self, tmp_path, capsys):
        # nx = 12 is fine for alpha6 but too small for the 8-ghost scheme
        cfg = write_config(tmp_path, "nx=12\nny=16\nRe=500\nt_end=0\n")
        code = cli.main(["run", cfg, "--viscous", "shen6",
                         "--output-dir", str(tmp_path / "o")])
        assert code == cli.EXIT_CONFIG
        assert "config error" in capsys.readouterr().err

    def test_missing_config_is_config_error(self, capsys):
        assert cli.main(["run"]) == cli.EXIT_CONFIG
        assert cli.main(["run", "/nonexistent/path.cfg"]) == cli.EXIT_CONFIG

    def test_bad_key_is_config_error(self, tmp_path, capsys):
        cfg = write_config(tmp_path, "nx=16\nny=16\nRe=500\nt_end=0\nzz=1\n")
        assert cli.main(["run", cfg]) == cli.EXIT_CONFIG
        assert "zz" in capsys.readouterr().err

    def test_runtime_failure_exit_code(self, tmp_path, capsys, monkeypatch):
        import viscousfd.solver as solver_mod

        cfg = write_config(tmp_path, "nx=16\nny=16\nRe=500\nt_end=0.1\n")

        def explode(state, schemes, gas):
            raise PositivityError("pressure", [(0, 0)], [-1.0])

        monkeypatch.setattr(solver_mod, "residual", explode)
        code = cli.main(["run", cfg, "--output-dir", str(tmp_path / "o")])
        assert code == cli.EXIT_RUNTIME
        assert "runtime failure" in capsys.readouterr().err
        assert (tmp_path / "o" / "error.json").exists()


class TestAnalyzeCommand:
    def test_writes_expected_nyquist_values(self, tmp_path):
        out = tmp_path / "spectral.csv"
        code = cli.main(["analyze", "--schemes", "shen6,alpha6",
                         "--samples", "128", "--output", str(out)])
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "theta,exact,shen6,alpha6"
        last = [float(tok) for tok in lines[-1].split(",")]
        assert abs(last[2]) <= 1e-13
        assert last[3] == pytest.approx(-272 / 45, abs=1e-13)

    def test_default_output_path(self, tmp_path):
        code = cli.main(["analyze", "--output-dir", str(tmp_path), "--quiet"])
        assert code == 0
        assert (tmp_path / "spectral.csv").exists()

    def test_bad_scheme_name(self, capsys):
        assert cli.main(["analyze", "--schemes", "weno"]) == cli.EXIT_CONFIG

    def test_bad_sample_count(self, capsys):
        assert cli.main(["analyze", "--samples", "1"]) == cli.EXIT_CONFIG


class TestDemoOddEven:
    def test_prints_per_scheme_amplitudes(self, tmp_path, capsys):
        cfg = write_config(tmp_path,
                           "nx=32\nny=16\nRe=500\nt_end=0\ncase=checkerboard\n")
        code = cli.main(["demo-oddeven", cfg])
        assert code == 0
        out = capsys.readouterr().out
        rows = {line.split()[0]: line.split()[1]
                for line in out.splitlines() if line.startswith(("alpha", "shen"))}
        assert rows["shen6"] == "0.0"
        assert float(rows["alpha6"]) == pytest.approx(272 / 45, rel=1e-12)
        assert float(rows["alpha4"]) == pytest.approx(16 / 3, rel=1e-12)

    def test_requires_viscosity(self, tmp_path, capsys):
        cfg = write_config(tmp_path,
                           "nx=32\nny=16\nmu=0\nt_end=0\ncase=checkerboard\n")
        assert cli.main(["demo-oddeven", cfg]) == cli.EXIT_CONFIG

    def test_odd_nx_rejected(self, tmp_path):
        cfg = write_config(tmp_path,
                           "nx=31\nny=16\nRe=500\nt_end=0\ncase=checkerboard\n")
        assert cli.main(["demo-oddeven", cfg]) == cli.EXIT_CONFIG
