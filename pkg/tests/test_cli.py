"""End-to-end command-line behavior: exit codes, artifacts, determinism."""

import json
import subprocess
import sys

import numpy as np
import pytest

from groverlab import cli
from groverlab.cli import ExperimentConfig, build_parser, config_from_args, main
from groverlab.reflection_machine import ReflectionMachineResult


def run_cli(tmp_path, *argv, name="out"):
    """Invoke main() in process with --output under tmp_path."""
    path = tmp_path / name
    code = main(list(argv) + ["--output", str(path)])
    return code, path


class TestExitCodes:
    def test_success(self, tmp_path):
        code, path = run_cli(tmp_path, "standard", "--n", "4", name="s.csv")
        assert code == 0
        assert path.exists()

    @pytest.mark.parametrize("argv", [
        ["standard", "--n", "3", "--M", "0"],
        ["standard", "--n", "3", "--M", "9"],
        ["standard", "--n", "3", "--marked", "8"],
        ["standard", "--n", "3", "--marked", "2,2"],
        ["degraded", "--n", "3", "--seed", "-1"],
        ["modified", "--n", "3", "--max-steps", "601"],
        ["degraded", "--n", "3", "--trials", "0"],
        ["degraded", "--n", "3", "--fidelity", "1.5"],
        ["noreflect-scan", "--grid", "5"],
        ["noreflect-optimize", "--format", "csv"],
        ["noreflect-optimize", "--starts", "0"],
        ["determinant", "--grid", "10"],
        ["determinant", "--n-list", "1"],
        ["fidelity", "--dims", "1"],
        ["scaling", "--n-min", "4", "--n-max", "2"],
    ])
    def test_config_errors(self, tmp_path, capsys, argv):
        code, _ = run_cli(tmp_path, *argv)
        assert code == 2
        assert "config error" in capsys.readouterr().err

    def test_capacity_errors(self, tmp_path, capsys):
        code, _ = run_cli(tmp_path, "standard", "--n", "30")
        assert code == 3
        assert "capacity error" in capsys.readouterr().err
        # dense family matrices are capped harder than state vectors
        code, _ = run_cli(tmp_path, "determinant", "--n-list", "13",
                          "--method", "lu")
        assert code == 3

    def test_nonconvergence(self, tmp_path, monkeypatch, capsys):
        stub = ReflectionMachineResult(
            d=2, control_overlaps=[0.9], best_residual=0.25,
            unitary=np.eye(4, dtype=complex), converged=False, starts=3,
            iterations=12, seed=1729, residual_history=[0.3, 0.25, 0.25],
            max_unitarity_error=0.0)
        monkeypatch.setattr(cli, "optimize_reflection_machine",
                            lambda *a, **k: stub)
        code, path = run_cli(tmp_path, "noreflect-optimize", name="o.json")
        assert code == 4
        # the artifact is still written so the failure can be inspected
        obj = json.loads(path.read_text())
        assert obj["converged"] is False
        assert obj["best_residual"] == 0.25
        assert "converged=False" in capsys.readouterr().out

    def test_unknown_command_config_error(self, capsys):
        assert cli.run(ExperimentConfig(command="bogus")) == 2
        assert "unknown command" in capsys.readouterr().err


class TestArtifacts:
    def test_standard_json(self, tmp_path):
        code, path = run_cli(tmp_path, "standard", "--n", "4",
                             "--format", "json", name="s.json")
        assert code == 0
        obj = json.loads(path.read_text())
        assert obj["algorithm"] == "standard"
        assert obj["n"] == 4 and obj["N"] == 16 and obj["M"] == 1
        assert obj["marked"] == [0]
        assert [e["step"] for e in obj["entries"]] == \
            list(range(len(obj["entries"])))

    def test_modified_csv(self, tmp_path, capsys):
        code, path = run_cli(tmp_path, "modified", "--n", "6", name="m.csv")
        assert code == 0
        lines = path.read_text().splitlines()
        assert lines[0] == "step,predicted_angle,measured_angle,success_prob"
        out = capsys.readouterr().out
        assert "modified n=6 M=1" in out and str(path) in out

    def test_degraded_csv_carries_spread(self, tmp_path):
        code, path = run_cli(tmp_path, "degraded", "--n", "3", "--trials",
                             "10", name="d.csv")
        assert code == 0
        header = path.read_text().splitlines()[0]
        assert header.endswith(",success_prob_std")

    def test_scan_csv_and_json(self, tmp_path):
        code, cpath = run_cli(tmp_path, "noreflect-scan", "--grid", "101",
                              name="scan.csv")
        assert code == 0
        lines = cpath.read_text().splitlines()
        assert lines[0] == "c_abs,discrepancy,singular"
        assert len(lines) == 102
        code, jpath = run_cli(tmp_path, "noreflect-scan", "--grid", "101",
                              "--format", "json", name="scan.json")
        assert code == 0
        obj = json.loads(jpath.read_text())
        assert obj["resolution"] == 101
        assert obj["zero_set"] == [0.0, 1.0]
        assert len(obj["points"]) == 101

    def test_determinant_csv(self, tmp_path):
        code, path = run_cli(tmp_path, "determinant", "--n-list", "2,3",
                             "--grid", "50", name="det.csv")
        assert code == 0
        lines = path.read_text().splitlines()
        assert lines[0] == "n,phi,det_signed,det_abs"
        assert len(lines) == 1 + 2 * 50
        last = lines[-1].split(",")
        assert last[0] == "3"
        assert abs(float(last[2]) - 1.0) < 1e-12
        assert float(last[3]) == abs(float(last[2]))

    def test_fidelity_rows(self, tmp_path):
        code, path = run_cli(tmp_path, "fidelity", "--dims", "2,10",
                             name="f.csv")
        assert code == 0
        lines = path.read_text().splitlines()
        assert lines[0] == "N,scaling_factor,fidelity"
        first = lines[1].split(",")
        assert first[0] == "2"
        assert float(first[2]) == pytest.approx(5.0 / 6.0, abs=1e-15)

    def test_scaling_columns(self, tmp_path):
        code, path = run_cli(tmp_path, "scaling", "--n-min", "2",
                             "--n-max", "4", name="sc.csv")
        assert code == 0
        lines = path.read_text().splitlines()
        assert lines[0] == ("n,standard_best_step,modified_best_step,"
                            "r_mod,iteration_bound")
        assert len(lines) == 4

    def test_optimize_json(self, tmp_path):
        code, path = run_cli(tmp_path, "noreflect-optimize", "--case",
                             "single", "--starts", "1", name="opt.json")
        assert code == 0
        obj = json.loads(path.read_text())
        assert list(obj) == ["d", "control_overlaps", "best_residual",
                             "converged", "starts", "iterations", "seed",
                             "residual_history"]
        assert obj["d"] == 2
        # a one-member control family has no pairwise overlaps
        assert obj["control_overlaps"] == []
        assert obj["best_residual"] < 1e-6
        assert obj["converged"] is True


class TestDefaultLocations:
    def test_env_dir(self, tmp_path, monkeypatch):
        monkeypatch.setenv(cli.OUT_DIR_ENV, str(tmp_path))
        assert main(["fidelity", "--dims", "2,10"]) == 0
        assert (tmp_path / "fidelity.csv").exists()

    def test_cwd_fallback(self, tmp_path, monkeypatch):
        monkeypatch.delenv(cli.OUT_DIR_ENV, raising=False)
        monkeypatch.chdir(tmp_path)
        assert main(["noreflect-scan", "--grid", "50"]) == 0
        assert (tmp_path / "noreflect-scan.csv").exists()

    def test_marked_overrides_m(self, tmp_path):
        code, path = run_cli(tmp_path, "standard", "--n", "3", "--M", "2",
                             "--marked", "5", "--format", "json",
                             name="mk.json")
        assert code == 0
        obj = json.loads(path.read_text())
        assert obj["marked"] == [5]
        assert obj["M"] == 1


class TestDeterminism:
    def test_degraded_rerun_byte_identical(self, tmp_path):
        _, p1 = run_cli(tmp_path, "degraded", "--n", "4", "--trials", "25",
                        "--seed", "11", name="a.csv")
        _, p2 = run_cli(tmp_path, "degraded", "--n", "4", "--trials", "25",
                        "--seed", "11", name="b.csv")
        _, p3 = run_cli(tmp_path, "degraded", "--n", "4", "--trials", "25",
                        "--seed", "12", name="c.csv")
        assert p1.read_bytes() == p2.read_bytes()
        assert p1.read_bytes() != p3.read_bytes()

    def test_scan_rerun_byte_identical(self, tmp_path):
        _, p1 = run_cli(tmp_path, "noreflect-scan", "--grid", "200",
                        name="a.csv")
        _, p2 = run_cli(tmp_path, "noreflect-scan", "--grid", "200",
                        name="b.csv")
        assert p1.read_bytes() == p2.read_bytes()


class TestParser:
    def test_round_trip(self):
        args = build_parser().parse_args(
            ["degraded", "--n", "7", "--marked", "1,3", "--trials", "50",
             "--seed", "9", "--fidelity", "0.75", "--format", "json"])
        config = config_from_args(args)
        assert config.command == "degraded"
        assert config.n == 7
        assert config.marked == (1, 3)
        assert config.trials == 50
        assert config.seed == 9
        assert config.fidelity == 0.75
        assert config.format == "json"

    def test_defaults_preserved(self):
        config = config_from_args(build_parser().parse_args(["standard"]))
        assert config.n == 10 and config.M == 1
        assert config.seed == cli.ExperimentConfig.seed
        assert config.marked is None and config.output is None

    def test_bad_int_list_rejected(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["determinant", "--n-list", "5,x"])

    def test_subcommand_required(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args([])


def test_module_entrypoint(tmp_path):
    out = tmp_path / "f.csv"
    proc = subprocess.run(
        [sys.executable, "-m", "groverlab", "fidelity", "--dims", "2",
         "--output", str(out)],
        capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert "fidelity" in proc.stdout
    assert out.exists()
