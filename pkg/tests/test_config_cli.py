"""Configuration parsing and the command line interface."""

import math

import pytest

from fgcbeam import ConfigError, LayupKind, parse_config
from fgcbeam.cli import main
from fgcbeam.config import with_parameter

MINIMAL = """\
[layup]
kind = A
p = 0
[geometry]
L = 5
h = 1
[bc]
type = SS
[load]
type = udl
"""

SANDWICH = """\
[material]
E_m = 70e9
E_c = 380e9
nu = 0.3
[layup]
kind = B
scheme = 1-1-1
p = 5
[geometry]
L = 5.0
h = 1.0
R_over_L = inf
[bc]
type = SS
[load]
type = udl
magnitude = 1.0
[mesh]
ne = 16
"""


class TestParseConfig:
    def test_minimal_defaults(self):
        cfg = parse_config(MINIMAL)
        assert cfg.ne == 16
        assert cfg.material.E_m == 70e9 and cfg.material.E_c == 380e9
        assert math.isinf(cfg.R_over_L) and cfg.inv_R == 0.0
        assert cfg.load.magnitude == 1.0
        assert cfg.layup.kind is LayupKind.A

    def test_full_config(self):
        cfg = parse_config(SANDWICH)
        assert cfg.layup.scheme == (1.0, 1.0, 1.0)
        assert cfg.layup.p == 5.0
        assert cfg.bc.value == "SS"

    def test_r_over_l_finite(self):
        cfg = parse_config(SANDWICH.replace("R_over_L = inf", "R_over_L = 10"))
        assert cfg.R_over_L == 10.0
        assert cfg.inv_R == pytest.approx(1.0 / 50.0)

    def test_negative_h_names_key(self):
        bad = MINIMAL.replace("h = 1", "h = -1")
        with pytest.raises(ConfigError, match="geometry.h"):
            parse_config(bad)

    def test_missing_key_named(self):
        bad = MINIMAL.replace("p = 0\n", "")
        with pytest.raises(ConfigError, match="layup.p"):
            parse_config(bad)

    def test_missing_section(self):
        with pytest.raises(ConfigError, match=r"\[load\]"):
            parse_config(MINIMAL.replace("[load]\ntype = udl\n", ""))

    def test_sandwich_requires_scheme(self):
        bad = MINIMAL.replace("kind = A", "kind = B")
        with pytest.raises(ConfigError, match="layup.scheme"):
            parse_config(bad)

    def test_bad_kind(self):
        with pytest.raises(ConfigError, match="layup.kind"):
            parse_config(MINIMAL.replace("kind = A", "kind = D"))

    def test_bad_bc(self):
        with pytest.raises(ConfigError, match="bc.type"):
            parse_config(MINIMAL.replace("type = SS", "type = XX"))

    def test_unknown_section(self):
        with pytest.raises(ConfigError, match="unknown section"):
            parse_config(MINIMAL + "[solvers]\nx = 1\n")

    def test_point_mid_needs_even_ne(self):
        bad = MINIMAL.replace("type = udl", "type = point_mid") + "[mesh]\nne = 7\n"
        with pytest.raises(ConfigError, match="mesh.ne"):
            parse_config(bad)

    def test_negative_p(self):
        with pytest.raises(ConfigError, match="layup.p"):
            parse_config(MINIMAL.replace("p = 0", "p = -2"))


class TestWithParameter:
    def test_p_replacement(self):
        cfg = parse_config(SANDWICH)
        assert with_parameter(cfg, "p", 2.5).layup.p == 2.5

    def test_r_over_l_inf(self):
        cfg = parse_config(SANDWICH)
        assert math.isinf(with_parameter(cfg, "R_over_L", "inf").R_over_L)
        assert with_parameter(cfg, "R_over_L", 5).R_over_L == 5.0

    def test_scheme_replacement(self):
        cfg = parse_config(SANDWICH)
        assert with_parameter(cfg, "scheme", "2-2-1").layup.scheme == (2.0, 2.0, 1.0)

    def test_l_over_h(self):
        cfg = parse_config(SANDWICH)
        assert with_parameter(cfg, "L_over_h", 20).L == pytest.approx(20.0)

    def test_invalid_rejected_before_solve(self):
        cfg = parse_config(SANDWICH)
        with pytest.raises(ConfigError):
            with_parameter(cfg, "p", -1.0)
        with pytest.raises(ConfigError):
            with_parameter(cfg, "R_over_L", -5)
        with pytest.raises(ConfigError):
            with_parameter(cfg, "volume", 1)


@pytest.fixture
def cfg_file(tmp_path):
    path = tmp_path / "case.ini"
    path.write_text(MINIMAL, encoding="utf-8")
    return path


@pytest.fixture
def sandwich_file(tmp_path):
    path = tmp_path / "sandwich.ini"
    path.write_text(SANDWICH, encoding="utf-8")
    return path


class TestCliRun:
    def test_run_reports_table_values(self, cfg_file, capsys):
        assert main(["run", str(cfg_file)]) == 0
        out = capsys.readouterr().out
        assert "w_bar" in out and "3.165211285e+00" in out

    def test_run_deterministic(self, cfg_file, capsys):
        main(["run", str(cfg_file)])
        first = capsys.readouterr().out
        main(["run", str(cfg_file)])
        assert capsys.readouterr().out == first

    def test_missing_file(self, tmp_path, capsys):
        assert main(["run", str(tmp_path / "nope.ini")]) == 2
        assert "error:" in capsys.readouterr().err

    def test_bad_config_reports_key(self, tmp_path, capsys):
        path = tmp_path / "bad.ini"
        path.write_text(MINIMAL.replace("h = 1", "h = -3"), encoding="utf-8")
        assert main(["run", str(path)]) == 2
        assert "geometry.h" in capsys.readouterr().err


class TestCliConverge:
    def test_csv_rows(self, sandwich_file, capsys):
        assert main(["converge", str(sandwich_file), "--ne", "2,4,8"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "ne,w_bar"
        data = [ln for ln in lines[1:] if not ln.startswith("#")]
        assert len(data) == 3
        assert data[0].startswith("2,") and data[2].startswith("8,")

    def test_cc_sequence_not_flagged(self, sandwich_file, tmp_path, capsys):
        cc = tmp_path / "cc.ini"
        cc.write_text(sandwich_file.read_text().replace("type = SS", "type = CC"),
                      encoding="utf-8")
        assert main(["converge", str(cc), "--ne", "2,4,8,16,32"]) == 0
        out = capsys.readouterr().out
        assert "not monotone" not in out

    def test_single_entry(self, sandwich_file, capsys):
        assert main(["converge", str(sandwich_file), "--ne", "16"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 2

    def test_symmetric_sandwich_flat_convergence(self, sandwich_file, capsys):
        main(["converge", str(sandwich_file), "--ne", "2,32"])
        lines = [ln for ln in capsys.readouterr().out.strip().splitlines()
                 if not ln.startswith("#")]
        v2 = float(lines[1].split(",")[1])
        v32 = float(lines[2].split(",")[1])
        assert abs(v32 - v2) / v32 < 1e-3


class TestCliSweep:
    def test_p_sweep_matches_reference_column(self, cfg_file, capsys):
        assert main(["sweep", str(cfg_file), "--param", "p",
                     "--values", "0,1,2,5,10"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "p,w_bar,sigma_bar,tau_bar"
        got = [float(row.split(",")[1]) for row in lines[1:]]
        expected = [3.1652, 6.2563, 8.0628, 9.8276, 10.937]
        for g, e in zip(got, expected):
            assert g == pytest.approx(e, rel=1e-3)

    def test_r_over_l_sweep_with_inf(self, sandwich_file, capsys):
        assert main(["sweep", str(sandwich_file), "--param", "R_over_L",
                     "--values", "5,10,20,50,100,inf"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 7
        assert lines[-1].startswith("inf,")

    def test_empty_values_header_only(self, cfg_file, capsys):
        assert main(["sweep", str(cfg_file), "--param", "p", "--values", ""]) == 0
        assert capsys.readouterr().out == "p,w_bar,sigma_bar,tau_bar\n"

    def test_invalid_value_rejected_before_any_solve(self, cfg_file, capsys):
        assert main(["sweep", str(cfg_file), "--param", "p",
                     "--values", "1,-3"]) == 2
        assert "error:" in capsys.readouterr().err


class TestCliProfile:
    def test_stdout_csv(self, sandwich_file, capsys):
        assert main(["profile", str(sandwich_file), "--x", "mid",
                     "--samples", "9"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "z_over_h,sigma_bar,tau_bar,side"
        assert lines[1].startswith("-5.000000000e-01,")
        assert lines[-1].startswith("5.000000000e-01,")
        # two interior interfaces sampled from both sides
        sides = [row.split(",")[3] for row in lines[1:]]
        assert sides.count("below") == 2 and sides.count("above") == 2

    def test_file_output_deterministic(self, sandwich_file, tmp_path):
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        main(["profile", str(sandwich_file), "--x", "support", "--samples", "33",
              "--out", str(out1)])
        main(["profile", str(sandwich_file), "--x", "support", "--samples", "33",
              "--out", str(out2)])
        assert out1.read_bytes() == out2.read_bytes()

    def test_surface_shear_zero_in_csv(self, sandwich_file, capsys):
        main(["profile", str(sandwich_file), "--x", "mid", "--samples", "5"])
        lines = capsys.readouterr().out.strip().splitlines()
        first, last = lines[1].split(","), lines[-1].split(",")
        assert float(first[2]) == 0.0 and float(last[2]) == 0.0

    def test_bad_station(self, sandwich_file, capsys):
        assert main(["profile", str(sandwich_file), "--x", "7.0"]) == 2


class TestCliBench:
    def test_single_table_passes(self, capsys):
        assert main(["bench", "--table", "T6"]) == 0
        out = capsys.readouterr().out
        assert "T6: 30/30 within tolerance" in out

    def test_unknown_table(self, capsys):
        assert main(["bench", "--table", "T99"]) == 2

    def test_tol_override_forces_failure(self, capsys):
        # impossible tolerance: every cell's print rounding exceeds it
        assert main(["bench", "--table", "T6", "--tol", "T6=1e-9"]) == 1
        out = capsys.readouterr().out
        assert "FAIL" in out and "worst offenders:" in out

    def test_csv_report(self, tmp_path, capsys):
        out = tmp_path / "bench.csv"
        assert main(["bench", "--table", "T6", "--csv", str(out)]) == 0
        lines = out.read_text(encoding="utf-8").strip().splitlines()
        assert lines[0].startswith("table,row,column,quantity")
        assert len(lines) == 31
        assert all(row.endswith("pass") for row in lines[1:])
