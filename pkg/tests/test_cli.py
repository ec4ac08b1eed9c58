import pytest

from ttc2d import cli, evaluate
from ttc2d.cli import main


@pytest.fixture(scope="module")
def traj_csv(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "traj.csv"
    assert main(["simulate", "--out", str(path)]) == cli.EXIT_OK
    return path


class TestSimulate:
    def test_writes_trajectory_and_reports_contact(self, traj_csv, capsys):
        assert traj_csv.exists()
        out = capsys.readouterr().out  # from the fixture run, may be empty here
        code = main(["simulate", "--out", str(traj_csv)])
        out = capsys.readouterr().out
        assert code == cli.EXIT_OK
        assert "SIDESWIPE" in out
        assert "semitrailer" in out

    def test_zero_steer_reports_no_contact(self, tmp_path, capsys):
        ini = tmp_path / "straight.ini"
        from importlib import resources

        text = resources.files("ttc2d.data").joinpath("default_cutin.ini").read_text()
        text = text.replace("steer_amplitude = -0.0275", "steer_amplitude = 0.0")
        ini.write_text(text)
        code = main(["simulate", "--scenario", str(ini), "--out", str(tmp_path / "t.csv")])
        assert code == cli.EXIT_OK
        assert "none" in capsys.readouterr().out

    def test_bad_path_exits_2(self, tmp_path, capsys):
        code = main(["simulate", "--scenario", str(tmp_path / "nope.ini"),
                     "--out", str(tmp_path / "t.csv")])
        assert code == cli.EXIT_IO
        assert "error" in capsys.readouterr().err


class TestCompute:
    def test_writes_series_with_inf_literal(self, traj_csv, tmp_path, capsys):
        out_path = tmp_path / "m.csv"
        code = main(["compute", "--trajectory", str(traj_csv), "--out", str(out_path),
                     "--measures", "CONV,V2", "--stride", "20"])
        assert code == cli.EXIT_OK
        text = out_path.read_text().splitlines()
        assert text[0] == "t,measure,ttc,direction,unit"
        assert any(",inf," in line for line in text[1:])

    def test_truncate_clamps_finite_values(self, traj_csv, tmp_path):
        out_path = tmp_path / "m.csv"
        main(["compute", "--trajectory", str(traj_csv), "--out", str(out_path),
              "--measures", "V2", "--stride", "20", "--truncate"])
        for line in out_path.read_text().splitlines()[1:]:
            value = line.split(",")[2]
            if value != "inf":
                assert float(value) <= 5.0

    def test_truncation_preserves_verdicts(self, traj_csv, tmp_path):
        plain, clamped = tmp_path / "a.csv", tmp_path / "b.csv"
        main(["compute", "--trajectory", str(traj_csv), "--out", str(plain),
              "--measures", "V2", "--stride", "20"])
        main(["compute", "--trajectory", str(traj_csv), "--out", str(clamped),
              "--measures", "V2", "--stride", "20", "--truncate"])
        for a, b in zip(plain.read_text().splitlines()[1:],
                        clamped.read_text().splitlines()[1:]):
            assert (a.split(",")[2] == "inf") == (b.split(",")[2] == "inf")

    def test_v1_on_articulated_exits_3(self, traj_csv, tmp_path, capsys):
        code = main(["compute", "--trajectory", str(traj_csv),
                     "--out", str(tmp_path / "x.csv"), "--measures", "V1"])
        assert code == cli.EXIT_BAD_SELECTION
        assert "rigid" in capsys.readouterr().err

    def test_unknown_measure_exits_3(self, traj_csv, tmp_path, capsys):
        code = main(["compute", "--trajectory", str(traj_csv),
                     "--out", str(tmp_path / "x.csv"), "--measures", "WARP"])
        assert code == cli.EXIT_BAD_SELECTION

    def test_perception_summary_matches_emitted_series(self, traj_csv, tmp_path, capsys):
        out_path = tmp_path / "m.csv"
        main(["compute", "--trajectory", str(traj_csv), "--out", str(out_path),
              "--measures", "V2", "--stride", "10"])
        summary = capsys.readouterr().out
        count = 0
        for line in out_path.read_text().splitlines()[1:]:
            value = line.split(",")[2]
            if value != "inf" and float(value) < 1.5:
                count += 1
        assert f"V2: {count} samples below 1.5 s" in summary

    def test_deterministic_output(self, traj_csv, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["compute", "--trajectory", str(traj_csv), "--measures", "V2,GUO2D",
                "--stride", "25"]
        main(args + ["--out", str(a)])
        main(args + ["--out", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_full_precision_flag(self, traj_csv, tmp_path):
        out_path = tmp_path / "m.csv"
        main(["compute", "--trajectory", str(traj_csv), "--out", str(out_path),
              "--measures", "CONV", "--stride", "200", "--precision", "full"])
        finite = [l.split(",")[2] for l in out_path.read_text().splitlines()[1:]
                  if l.split(",")[2] != "inf"]
        assert any(len(v) > 8 for v in finite)


class TestValidate:
    def test_pass_run_exits_0(self, capsys):
        code = main(["validate", "--version", "guo", "--trials", "40", "--seed", "5"])
        assert code == cli.EXIT_OK
        out = capsys.readouterr().out
        assert "PASS" in out

    def test_zero_trials_is_usage_error(self, capsys):
        code = main(["validate", "--version", "guo", "--trials", "0"])
        assert code == cli.EXIT_IO

    def test_deterministic_report(self, capsys):
        main(["validate", "--version", "v1", "--trials", "25", "--seed", "9"])
        first = capsys.readouterr().out
        main(["validate", "--version", "v1", "--trials", "25", "--seed", "9"])
        second = capsys.readouterr().out
        assert first == second


class TestEnvironmentOverrides:
    def test_env_sets_default_and_flag_wins(self, monkeypatch, capsys):
        monkeypatch.setenv("TTC2D_TRIALS", "30")
        monkeypatch.setenv("TTC2D_SEED", "5")
        code = main(["validate", "--version", "guo"])
        assert code == cli.EXIT_OK
        assert "30 trials" in capsys.readouterr().out
        code = main(["validate", "--version", "guo", "--trials", "15"])
        assert "15 trials" in capsys.readouterr().out


class TestSelection:
    def test_normalize_rejects_empty(self):
        with pytest.raises(evaluate.MeasureSelectionError):
            evaluate.normalize_selection(["", "  "])

    def test_normalize_dedupes_and_uppercases(self):
        assert evaluate.normalize_selection(["v2", "V2", "conv"]) == ("V2", "CONV")
