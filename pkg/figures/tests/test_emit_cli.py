"""Command line behavior: flags, exit codes, defaults, and determinism."""

import subprocess
import sys

import pytest

from figemit import cli


class TestExitCodes:
    def test_each_kind_renders(self, artifacts, tmp_path, capsys):
        jobs = (
            ("determinant", "det.csv"),
            ("trajectory", "trace.csv"),
            ("scaling", "scaling.csv"),
        )
        for kind, name in jobs:
            out = tmp_path / f"{kind}.svg"
            code = cli.main(["--kind", kind, "--input",
                             str(artifacts / name), "--output", str(out)])
            assert code == 0
            assert out.exists()
            stdout = capsys.readouterr().out
            assert stdout.startswith(f"{kind}:")
            assert str(out) in stdout

    def test_missing_input_exits_3(self, tmp_path, capsys):
        code = cli.main(["--kind", "determinant",
                         "--input", str(tmp_path / "ghost.csv"),
                         "--output", str(tmp_path / "o.svg")])
        assert code == 3
        err = capsys.readouterr().err
        assert "input error" in err
        assert "ghost.csv" in err

    def test_corrupt_input_reports_file_and_line(self, tmp_path, capsys):
        bad = tmp_path / "det.csv"
        bad.write_text("n,phi,det_signed,det_abs\n5,0.1,0.5,0.5\n5,x,1,1\n")
        code = cli.main(["--kind", "determinant", "--input", str(bad),
                         "--output", str(tmp_path / "o.svg")])
        assert code == 3
        err = capsys.readouterr().err
        assert "det.csv, line 3" in err

    def test_empty_input_exits_3_without_partial_image(self, tmp_path, capsys):
        empty = tmp_path / "det.csv"
        empty.write_text("")
        out = tmp_path / "o.svg"
        code = cli.main(["--kind", "determinant", "--input", str(empty),
                         "--output", str(out)])
        assert code == 3
        assert "empty file" in capsys.readouterr().err
        assert not out.exists()

    def test_unknown_kind_exits_2(self):
        with pytest.raises(SystemExit) as err:
            cli.main(["--kind", "pie", "--input", "a.csv"])
        assert err.value.code == 2

    def test_missing_required_flags_exit_2(self):
        with pytest.raises(SystemExit) as err:
            cli.main(["--kind", "scaling"])
        assert err.value.code == 2

    def test_bad_style_value_exits_2(self, artifacts, tmp_path, capsys):
        code = cli.main(["--kind", "determinant",
                         "--input", str(artifacts / "det.csv"),
                         "--output", str(tmp_path / "o.svg"),
                         "--style", "9=wavy"])
        assert code == 2
        assert "config error" in capsys.readouterr().err

    def test_malformed_style_flag_exits_2(self):
        with pytest.raises(SystemExit) as err:
            cli.main(["--kind", "determinant", "--input", "a.csv",
                      "--style", "nine"])
        assert err.value.code == 2


class TestParser:
    def test_flags_mirror_spec_fields(self):
        args = cli.build_parser().parse_args([
            "--kind", "determinant",
            "--input", "a.csv", "--input", "b.csv",
            "--output", "fig.svg",
            "--signed",
            "--style", "9=dotted", "--style", "5=solid",
        ])
        assert args.kind == "determinant"
        assert [str(p) for p in args.input] == ["a.csv", "b.csv"]
        assert str(args.output) == "fig.svg"
        assert args.signed
        assert args.style == [(9, "dotted"), (5, "solid")]

    def test_defaults(self):
        args = cli.build_parser().parse_args(
            ["--kind", "scaling", "--input", "a.csv"]
        )
        assert args.output is None
        assert not args.signed
        assert args.style == []

    def test_default_output_is_kind_named_svg(self, artifacts, tmp_path,
                                              monkeypatch, capsys):
        monkeypatch.chdir(tmp_path)
        code = cli.main(["--kind", "scaling",
                         "--input", str(artifacts / "scaling.csv")])
        assert code == 0
        assert (tmp_path / "scaling.svg").exists()
        capsys.readouterr()


def test_module_entrypoint_is_deterministic(artifacts, tmp_path):
    outputs = []
    for name in ("r1.svg", "r2.svg"):
        out = tmp_path / name
        proc = subprocess.run(
            [sys.executable, "-m", "figemit",
             "--kind", "determinant",
             "--input", str(artifacts / "det.csv"),
             "--output", str(out)],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0, proc.stderr
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]


def test_emitter_never_imports_the_simulation_package():
    # the figure side consumes files only; a dependency on the producer
    # package would open the door to recomputing instead of reading
    code = ("import sys, figemit; "
            "sys.exit(1 if 'groverlab' in sys.modules else 0)")
    proc = subprocess.run([sys.executable, "-c", code])
    assert proc.returncode == 0
