"""Command-line interface: subcommands, exit codes, preset round-trip."""

import pytest

from evobench.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPresetsCommand:
    def test_dump_contains_table_values(self, capsys):
        code, out, _ = run_cli(capsys, "presets", "--algo", "iasa")
        assert code == 0
        assert "[iasa.puc]" in out
        assert "TminAtCallsRate = 20%" in out
        assert "CrossoverProb = 90%" in out

    def test_dump_all_algorithms(self, capsys):
        code, out, _ = run_cli(capsys, "presets")
        assert code == 0
        for section in ("[de.chebyshev]", "[sade.type0]", "[rasa.beam]",
                        "[iasa.chebyshev]"):
            assert section in out

    def test_dump_to_file(self, capsys, tmp_path):
        target = tmp_path / "presets.txt"
        code, _, _ = run_cli(capsys, "presets", "--out", str(target))
        assert code == 0
        assert "[de.puc]" in target.read_text()


class TestRunCommand:
    ARGS = ("run", "--problem", "type0", "--dim", "2", "--algo", "rasa",
            "--seed", "1", "--max-calls", "2000")

    def test_repeat_is_identical(self, capsys):
        code1, out1, _ = run_cli(capsys, *self.ARGS)
        code2, out2, _ = run_cli(capsys, *self.ARGS)
        assert code1 == code2 == 0
        assert out1 == out2
        assert "best_value=" in out1


class TestBenchCommand:
    def test_small_campaign_writes_reports(self, capsys, tmp_path):
        out_dir = tmp_path / "bench"
        code, out, _ = run_cli(
            capsys, "bench", "--problem", "type0", "--dim", "2",
            "--algo", "de", "--runs", "3", "--seed", "7",
            "--max-calls", "2000", "--out", str(out_dir))
        assert code == 0
        report = (out_dir / "report.csv").read_text()
        assert report.splitlines()[0] == \
            "problem,algorithm,dim,runs,successes,avg_calls,base_seed"
        successes = int(report.splitlines()[1].split(",")[4])
        assert 0 <= successes <= 3
        assert (out_dir / "runs.csv").exists()
        assert (out_dir / "report.json").exists()
        assert out.startswith("problem,")

    def test_preset_file_round_trip(self, capsys, tmp_path):
        preset_file = tmp_path / "presets.txt"
        run_cli(capsys, "presets", "--algo", "de", "--out", str(preset_file))
        base = ("bench", "--problem", "type0", "--dim", "2", "--algo", "de",
                "--runs", "2", "--seed", "3", "--max-calls", "1500")
        out_a, out_b = tmp_path / "a", tmp_path / "b"
        assert run_cli(capsys, *base, "--out", str(out_a))[0] == 0
        assert run_cli(capsys, *base, "--preset", str(preset_file),
                       "--out", str(out_b))[0] == 0
        assert (out_a / "runs.csv").read_text() == \
            (out_b / "runs.csv").read_text()


class TestScaleCommand:
    def test_writes_plot_data(self, capsys, tmp_path):
        out_dir = tmp_path / "scale"
        code, out, _ = run_cli(
            capsys, "scale", "--algo", "de", "--dims", "1,2", "--runs", "2",
            "--seed", "5", "--max-calls", "4000", "--out", str(out_dir))
        assert code == 0
        data = (out_dir / "scaling.dat").read_text().strip().splitlines()
        assert len(data) == 2
        assert (out_dir / "runs_dim1.csv").exists()
        assert (out_dir / "runs_dim2.csv").exists()


class TestErrors:
    def test_unknown_problem_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "run", "--problem", "knapsack",
                             "--algo", "de")
        assert code == 2

    def test_unknown_preset_key_is_usage_error(self, capsys):
        code, _, err = run_cli(
            capsys, "run", "--problem", "type0", "--dim", "2", "--algo", "de",
            "--seed", "1", "--max-calls", "500", "--set", "bogus=1")
        assert code == 2
        assert "bogus" in err

    def test_malformed_set_flag(self, capsys):
        code, _, _ = run_cli(
            capsys, "run", "--problem", "type0", "--dim", "2", "--algo", "de",
            "--set", "CR0.5")
        assert code == 2
