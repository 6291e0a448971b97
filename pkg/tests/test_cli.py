import csv
import math
import subprocess
import sys

import pytest

from su2walk.cli import UsageError, main, parse_angle, parse_config, parse_grid


def read_csv(path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    return rows[0], rows[1:]


def summary_fields(text):
    return dict(item.split("=", 1) for item in text.split())


class TestParsing:
    @pytest.mark.parametrize("text,expected", [
        ("pi/4", math.pi / 4),
        ("5pi/12", 5 * math.pi / 12),
        ("-pi", -math.pi),
        ("0.5*pi", math.pi / 2),
        ("1.25", 1.25),
    ])
    def test_radian_angles(self, text, expected):
        assert parse_angle(text, "rad") == pytest.approx(expected)

    def test_degrees(self):
        assert parse_angle("15", "deg") == pytest.approx(math.pi / 12)

    @pytest.mark.parametrize("text", ["pi/4", "abc", "nan", "inf"])
    def test_bad_degree_angles(self, text):
        with pytest.raises(UsageError):
            parse_angle(text, "deg")

    def test_grid_inclusive(self):
        grid = parse_grid("5:85:10", "deg")
        assert [round(math.degrees(g)) for g in grid] == list(range(5, 86, 10))

    @pytest.mark.parametrize("text", ["5:85", "85:5:10", "0:10:0"])
    def test_bad_grid(self, text):
        with pytest.raises(UsageError):
            parse_grid(text, "deg")

    def test_config_file_overridden_by_flags(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("# comment\nmode=line\nangle_unit=deg\ntheta=30\nsteps=40\n")
        c = parse_config(["--config", str(cfg), "--steps", "12"])
        assert c.mode == "line" and c.steps == 12
        assert c.coin.theta == pytest.approx(math.pi / 6)

    def test_custom_init(self):
        c = parse_config(["--mode", "line", "--steps", "3", "--init", "custom:0,0,1,0"])
        assert (c.init.alpha, c.init.beta) == (0, 1)


class TestModes:
    def test_line_hadamard(self, tmp_path, capsys):
        out = tmp_path / "line.csv"
        assert main(["--mode", "line", "--theta", "pi/4", "--steps", "100", "--out", str(out)]) == 0
        header, rows = read_csv(out)
        assert header == ["position", "probability"]
        assert len(rows) == 201
        assert abs(sum(float(p) for _, p in rows) - 1) <= 1e-6
        fields = summary_fields(capsys.readouterr().out)
        assert float(fields["asymmetry"]) <= 1e-10
        assert float(fields["sigma2"]) == pytest.approx(2928.93, rel=0.05)

    def test_line_left_bias(self, capsys):
        assert main(["--mode", "line", "--xi", "5pi/12", "--theta", "pi/3", "--steps", "100"]) == 0
        assert float(summary_fields(capsys.readouterr().out)["mean"]) < 0

    def test_envelope(self, tmp_path, capsys):
        out = tmp_path / "env.csv"
        assert main(["--mode", "envelope", "--theta", "pi/4", "--steps", "100", "--out", str(out)]) == 0
        header, rows = read_csv(out)
        assert header == ["position", "probability", "envelope"]
        assert float(rows[0][2]) == 0.0  # -100 lies beyond N cos(theta)
        centre = [r for r in rows if r[0] == "0"][0]
        assert float(centre[2]) > 0
        assert "sigma2_quadrature" in capsys.readouterr().out

    def test_sweep_theta(self, tmp_path):
        out = tmp_path / "sweep.csv"
        assert main(["--mode", "sweep-theta", "--angle-unit", "deg", "--theta-grid", "15:75:30",
                     "--steps", "60", "--out", str(out), "--jobs", "3"]) == 0
        header, rows = read_csv(out)
        assert header == ["theta_deg", "c_theta", "entropy_bits"]
        assert [float(r[0]) for r in rows] == pytest.approx([15, 45, 75])

    def test_sweep_eta(self, tmp_path):
        out = tmp_path / "eta.csv"
        assert main(["--mode", "sweep-eta", "--angle-unit", "deg", "--theta", "60",
                     "--eta-grid", "0:90:45", "--steps", "60", "--out", str(out)]) == 0
        header, rows = read_csv(out)
        assert header == ["eta_deg", "c_theta", "entropy_bits", "mean"]
        assert float(rows[0][3]) == pytest.approx(0, abs=1e-9)
        assert float(rows[2][3]) < 0

    def test_cycle(self, tmp_path, capsys):
        out = tmp_path / "cyc.csv"
        assert main(["--mode", "cycle", "--theta", "pi/4", "--vertices", "21", "--horizon", "200",
                     "--out", str(out)]) == 0
        header, rows = read_csv(out)
        assert header == ["vertex", "probability"] and len(rows) == 21
        assert abs(sum(float(r[1]) for r in rows) - 1) <= 1e-6

    def test_mixing(self, tmp_path, capsys):
        out = tmp_path / "mix.csv"
        assert main(["--mode", "mixing", "--theta", "15", "--angle-unit", "deg", "--vertices", "101",
                     "--horizon", "300", "--out", str(out)]) == 0
        header, rows = read_csv(out)
        assert header == ["T", "tv_distance"] and len(rows) == 300
        assert summary_fields(capsys.readouterr().out)["mixing_time"] == "94"

    def test_even_cycle_warning(self, capsys):
        assert main(["--mode", "mixing", "--theta", "pi/4", "--vertices", "20", "--horizon", "50"]) == 0
        assert "even" in capsys.readouterr().err

    def test_deterministic(self, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for p in paths:
            main(["--mode", "sweep-theta", "--theta-grid", "0.2:1.2:0.5", "--steps", "50",
                  "--out", str(p), "--jobs", "4"])
        assert paths[0].read_bytes() == paths[1].read_bytes()


class TestErrors:
    @pytest.mark.parametrize("argv", [
        [],
        ["--mode", "nope"],
        ["--mode", "line"],
        ["--mode", "sweep-theta", "--steps", "10"],
        ["--mode", "line", "--steps", "5", "--theta", "x"],
        ["--mode", "line", "--steps", "5", "--init", "custom:1,1,1,1"],
        ["--mode", "mixing", "--vertices", "11", "--epsilon", "2"],
        ["--mode", "envelope", "--steps", "10", "--theta", "2.0"],
        ["--config", "/nonexistent/cfg"],
    ])
    def test_usage_exit_one(self, argv, capsys):
        assert main(argv) == 1
        err = capsys.readouterr().err.strip()
        assert err.startswith("su2walk: error:") and "\n" not in err

    def test_resource_exit_two(self, capsys):
        assert main(["--mode", "line", "--steps", str(10**9)]) == 2
        assert "steps=1000000000" in capsys.readouterr().err

    def test_unwritable_output(self, tmp_path):
        assert main(["--mode", "line", "--steps", "3", "--out", str(tmp_path / "no" / "x.csv")]) == 2


def test_module_entry_point(tmp_path):
    out = tmp_path / "l.csv"
    r = subprocess.run([sys.executable, "-m", "su2walk", "--mode", "line", "--steps", "4",
                        "--theta", "pi/4", "--out", str(out)], capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout.startswith("mode=line")
