"""Command-line harness: run experiments, persist traces, stay reproducible.

One binary with subcommands, shared validation and IO. Every run writes
its artifact atomically and prints a one-line summary to stdout. Exit
codes: 0 success, 2 invalid configuration, 3 capacity exceeded, 4
optimizer finished without converging.

Stochastic commands default to seed 1729 (config.DEFAULT_SEED); pass
--seed to vary. The default output directory is the current directory,
overridable with the GROVERLAB_OUT_DIR environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .cloning import (
    determinant_curve,
    clone_quality,
    independence_boundary,
    run_degraded_modified,
)
from .config import DEFAULT_MAX_QUBITS, DEFAULT_SEED
from .errors import CapacityError, ConfigError
from .modified import r_mod, run_modified
from .reflection_machine import (
    benchmark_controls,
    benchmark_targets,
    consistency_scan,
    optimize_reflection_machine,
    scan_zero_set,
)
from .standard import iteration_bound, run_standard
from .states import SearchProblem
from .trace import render_table_csv, write_text_atomic, write_trace

OUT_DIR_ENV = "GROVERLAB_OUT_DIR"

COMMANDS = (
    "standard",
    "modified",
    "degraded",
    "noreflect-scan",
    "noreflect-optimize",
    "determinant",
    "fidelity",
    "scaling",
)


@dataclass
class ExperimentConfig:
    """Validated parameters for one CLI run."""

    command: str
    n: int = 10
    M: int = 1
    marked: Optional[tuple] = None
    max_steps: Optional[int] = None
    trials: int = 200
    seed: int = DEFAULT_SEED
    grid: int = 0  # resolved per command
    starts: int = 20
    output: Optional[str] = None
    format: str = "csv"
    fidelity: Optional[float] = None
    d: int = 2
    case: str = "overlap"
    overlap: float = 0.9
    n_list: tuple = (5, 7, 9)
    dims: tuple = (2, 10, 100, 1000, 10000, 100000, 1000000)
    method: str = "closed"
    n_min: int = 2
    n_max: int = 16
    max_qubits: int = DEFAULT_MAX_QUBITS


def _require(cond: bool, name: str, msg: str) -> None:
    if not cond:
        raise ConfigError(f"field '{name}': {msg}")


def _resolve_output(config: ExperimentConfig, ext: str) -> Path:
    if config.output:
        return Path(config.output)
    base = os.environ.get(OUT_DIR_ENV, ".")
    return Path(base) / f"{config.command}.{ext}"


def _build_problem(config: ExperimentConfig) -> SearchProblem:
    _require(config.n >= 1, "n", "must be >= 1")
    dim = 1 << config.n
    if config.marked is not None:
        _require(len(config.marked) >= 1, "marked", "must be nonempty")
        _require(
            all(0 <= x < dim for x in config.marked),
            "marked",
            f"indices must lie in [0, {dim})",
        )
        _require(
            len(set(config.marked)) == len(config.marked),
            "marked",
            "indices must be distinct",
        )
        return SearchProblem(config.n, config.marked)
    _require(1 <= config.M <= dim, "M", f"must lie in [1, {dim}]")
    return SearchProblem(config.n, range(config.M))


def _validate_common(config: ExperimentConfig) -> None:
    _require(config.format in ("csv", "json"), "format", "must be csv or json")
    _require(config.seed >= 0, "seed", "must be >= 0")
    if config.max_steps is not None:
        _require(config.max_steps >= 0, "max_steps", "must be >= 0")


def _cmd_standard(config: ExperimentConfig) -> int:
    problem = _build_problem(config)
    trace = run_standard(
        problem, max_steps=config.max_steps, max_qubits=config.max_qubits
    )
    path = _resolve_output(config, config.format)
    write_trace(trace, path, config.format)
    best = trace.best_entry()
    print(
        f"standard n={problem.n} M={problem.M}: best k={best.step} "
        f"p={best.success_prob:.6f} (bound {iteration_bound(problem)}) "
        f"-> {path}"
    )
    return 0


def _cmd_modified(config: ExperimentConfig) -> int:
    problem = _build_problem(config)
    if config.max_steps is not None:
        _require(config.max_steps <= 600, "max_steps",
                 "at most 600 (the tripled angle overflows beyond that)")
    trace = run_modified(
        problem, max_steps=config.max_steps, max_qubits=config.max_qubits
    )
    path = _resolve_output(config, config.format)
    write_trace(trace, path, config.format)
    best = trace.best_entry()
    print(
        f"modified n={problem.n} M={problem.M}: best l={best.step} "
        f"p={best.success_prob:.6f} r_mod={r_mod(problem):.3f} -> {path}"
    )
    return 0


def _cmd_degraded(config: ExperimentConfig) -> int:
    problem = _build_problem(config)
    _require(1 <= config.trials <= 1_000_000, "trials",
             "must lie in [1, 1000000]")
    if config.max_steps is not None:
        _require(config.max_steps <= 600, "max_steps",
                 "at most 600 (the tripled angle overflows beyond that)")
    if config.fidelity is not None:
        _require(0.0 <= config.fidelity <= 1.0, "fidelity",
                 "must lie in [0, 1]")
    trace = run_degraded_modified(
        problem,
        trials=config.trials,
        seed=config.seed,
        fidelity=config.fidelity,
        max_steps=config.max_steps,
        max_qubits=config.max_qubits,
    )
    path = _resolve_output(config, config.format)
    write_trace(trace, path, config.format)
    terminal = trace.entries[-1]
    print(
        f"degraded n={problem.n} M={problem.M} trials={config.trials} "
        f"fidelity={trace.fidelity:.6f}: mean terminal "
        f"p={terminal.success_prob:.6f} (std {terminal.success_prob_std:.6f}) "
        f"-> {path}"
    )
    return 0


def _cmd_noreflect_scan(config: ExperimentConfig) -> int:
    grid = config.grid or 10000
    _require(grid >= 10, "grid", "must be >= 10")
    points = consistency_scan(grid)
    zeros = scan_zero_set(points)
    path = _resolve_output(config, config.format)
    if config.format == "csv":
        rows = [(p.c_abs, p.discrepancy, p.singular) for p in points]
        write_text_atomic(
            path, render_table_csv(["c_abs", "discrepancy", "singular"], rows)
        )
    else:
        obj = {
            "resolution": grid,
            "zero_set": zeros,
            "points": [
                {
                    "c_abs": p.c_abs,
                    "discrepancy": p.discrepancy,
                    "singular": p.singular,
                }
                for p in points
            ],
        }
        write_text_atomic(path, json.dumps(obj, indent=2) + "\n")
    zs = ", ".join(f"{z:g}" for z in zeros) or "none"
    print(
        f"noreflect-scan resolution={grid}: discrepancy zeros at "
        f"|c| in {{{zs}}} -> {path}"
    )
    return 0


def _cmd_noreflect_optimize(config: ExperimentConfig) -> int:
    _require(config.format == "json", "format",
             "noreflect-optimize serializes to json only")
    _require(config.d >= 2, "d", "must be >= 2")
    _require(1 <= config.starts <= 10000, "starts",
             "must lie in [1, 10000]")
    _require(0.0 <= config.overlap <= 1.0, "overlap", "must lie in [0, 1]")
    controls = benchmark_controls(config.case, d=config.d,
                                  overlap=config.overlap)
    targets = benchmark_targets(d=config.d)
    result = optimize_reflection_machine(
        config.d, controls, targets, starts=config.starts, seed=config.seed
    )
    path = _resolve_output(config, "json")
    write_text_atomic(path, json.dumps(result.to_json_obj(), indent=2) + "\n")
    print(
        f"noreflect-optimize d={config.d} case={config.case} "
        f"starts={result.starts}: best residual "
        f"{result.best_residual:.6e} converged={result.converged} -> {path}"
    )
    return 0 if result.converged else 4


def _cmd_determinant(config: ExperimentConfig) -> int:
    grid = config.grid or 200
    _require(grid >= 50, "grid", "must be >= 50")
    _require(len(config.n_list) >= 1, "n_list", "must be nonempty")
    _require(all(n >= 2 for n in config.n_list), "n_list",
             "every qubit count must be >= 2")
    rows = determinant_curve(config.n_list, grid=grid, method=config.method)
    path = _resolve_output(config, config.format)
    table = [(n, phi, det, abs(det)) for n, phi, det in rows]
    if config.format == "csv":
        write_text_atomic(
            path,
            render_table_csv(["n", "phi", "det_signed", "det_abs"], table),
        )
    else:
        obj = {
            "n_values": list(config.n_list),
            "grid": grid,
            "method": config.method,
            "rows": [
                {"n": n, "phi": phi, "det_signed": det, "det_abs": adet}
                for n, phi, det, adet in table
            ],
        }
        write_text_atomic(path, json.dumps(obj, indent=2) + "\n")
    endpoint = rows[grid - 1][2]  # last phi of the first curve
    boundary = independence_boundary(1 << config.n_list[0])
    print(
        f"determinant n_list={','.join(str(n) for n in config.n_list)} "
        f"grid={grid} method={config.method}: det(pi/2)={endpoint:.12g}, "
        f"zero at phi={boundary:.6f} for n={config.n_list[0]} -> {path}"
    )
    return 0


def _cmd_fidelity(config: ExperimentConfig) -> int:
    _require(len(config.dims) >= 1, "dims", "must be nonempty")
    _require(all(d >= 2 for d in config.dims), "dims",
             "every dimension must be >= 2")
    rows = []
    for dim in config.dims:
        q = clone_quality(dim)
        rows.append((dim, q.scaling_factor, q.fidelity))
    path = _resolve_output(config, config.format)
    if config.format == "csv":
        write_text_atomic(
            path, render_table_csv(["N", "scaling_factor", "fidelity"], rows)
        )
    else:
        obj = {
            "rows": [
                {"N": dim, "scaling_factor": s, "fidelity": f}
                for dim, s, f in rows
            ]
        }
        write_text_atomic(path, json.dumps(obj, indent=2) + "\n")
    first = rows[0]
    last = rows[-1]
    print(
        f"fidelity dims={first[0]}..{last[0]}: F({first[0]})={first[2]:.6f} "
        f"F({last[0]})={last[2]:.8f} -> {path}"
    )
    return 0


def compare_scaling(
    n_values,
    M: int = 1,
    output=None,
    fmt: str = "csv",
    max_qubits: int = DEFAULT_MAX_QUBITS,
) -> list:
    """Tabulate best-step indices of both searches across register sizes.

    Both columns come from simulated traces: the standard search is run
    through its full iteration bound, the modified search through its
    default window. Returns (n, standard_best_step, modified_best_step,
    r_mod, iteration_bound) rows; writes them to ``output`` when given.
    """
    rows = []
    for n in n_values:
        problem = SearchProblem(n, range(M))
        std = run_standard(
            problem,
            max_steps=iteration_bound(problem),
            max_qubits=max_qubits,
        )
        mod = run_modified(problem, max_qubits=max_qubits)
        rows.append(
            (
                n,
                std.best_entry().step,
                mod.best_entry().step,
                r_mod(problem),
                iteration_bound(problem),
            )
        )
    if output is not None:
        header = [
            "n",
            "standard_best_step",
            "modified_best_step",
            "r_mod",
            "iteration_bound",
        ]
        if fmt == "csv":
            write_text_atomic(output, render_table_csv(header, rows))
        else:
            obj = {
                "M": M,
                "rows": [dict(zip(header, row)) for row in rows],
            }
            write_text_atomic(output, json.dumps(obj, indent=2) + "\n")
    return rows


def _cmd_scaling(config: ExperimentConfig) -> int:
    _require(config.n_min >= 1, "n_min", "must be >= 1")
    _require(config.n_max >= config.n_min, "n_max", "must be >= n_min")
    _require(1 <= config.M <= (1 << config.n_min), "M",
             f"must lie in [1, {1 << config.n_min}] for n_min={config.n_min}")
    path = _resolve_output(config, config.format)
    rows = compare_scaling(
        range(config.n_min, config.n_max + 1),
        M=config.M,
        output=path,
        fmt=config.format,
        max_qubits=config.max_qubits,
    )
    last = rows[-1]
    print(
        f"scaling n={config.n_min}..{config.n_max} M={config.M}: at n={last[0]} "
        f"standard best step {last[1]}, modified best step {last[2]} -> {path}"
    )
    return 0


_HANDLERS = {
    "standard": _cmd_standard,
    "modified": _cmd_modified,
    "degraded": _cmd_degraded,
    "noreflect-scan": _cmd_noreflect_scan,
    "noreflect-optimize": _cmd_noreflect_optimize,
    "determinant": _cmd_determinant,
    "fidelity": _cmd_fidelity,
    "scaling": _cmd_scaling,
}


def run(config: ExperimentConfig) -> int:
    """Validate, dispatch, and report; returns the process exit code."""
    try:
        if config.command not in _HANDLERS:
            raise ConfigError(f"field 'command': unknown command {config.command!r}")
        _validate_common(config)
        return _HANDLERS[config.command](config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 3


def _int_tuple(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {exc}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groverlab",
        description=(
            "Search-dynamics experiments: fixed-axis and "
            "reflect-about-current-state runs, reflection-machine "
            "feasibility, and cloning analysis."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, default_format="csv"):
        p.add_argument("--output", help="output file path "
                       f"(default: <command>.<format> in ${OUT_DIR_ENV} or .)")
        p.add_argument("--format", choices=("csv", "json"),
                       default=default_format)

    def add_problem(p, default_n):
        p.add_argument("--n", type=int, default=default_n,
                       help="register size in qubits")
        p.add_argument("--M", type=int, default=1,
                       help="number of solutions (marks 0..M-1)")
        p.add_argument("--marked", type=_int_tuple,
                       help="explicit solution indices, comma separated "
                            "(overrides --M)")
        p.add_argument("--max-steps", type=int, dest="max_steps")
        p.add_argument("--max-qubits", type=int, dest="max_qubits",
                       default=DEFAULT_MAX_QUBITS)

    p = sub.add_parser("standard", help="fixed-axis search trace")
    add_problem(p, 10)
    add_io(p)

    p = sub.add_parser("modified", help="reflect-about-current-state trace")
    add_problem(p, 10)
    add_io(p)

    p = sub.add_parser("degraded",
                       help="modified search with imperfect copies as axes")
    add_problem(p, 5)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--fidelity", type=float,
                   help="squared axis overlap (default: best universal copier)")
    add_io(p)

    p = sub.add_parser("noreflect-scan",
                       help="implied-overlap discrepancy over |c| in [0,1]")
    p.add_argument("--grid", type=int, default=10000)
    add_io(p)

    p = sub.add_parser("noreflect-optimize",
                       help="search unitaries for a reflection machine")
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--case", choices=("single", "orthogonal", "overlap"),
                   default="overlap")
    p.add_argument("--overlap", type=float, default=0.9)
    p.add_argument("--starts", type=int, default=20)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    add_io(p, default_format="json")

    p = sub.add_parser("determinant",
                       help="family determinant over the angle range")
    p.add_argument("--n-list", type=_int_tuple, dest="n_list",
                   default=(5, 7, 9))
    p.add_argument("--grid", type=int, default=200)
    p.add_argument("--method", choices=("closed", "lu"), default="closed")
    add_io(p)

    p = sub.add_parser("fidelity", help="universal-copier quality table")
    p.add_argument("--dims", type=_int_tuple,
                   default=(2, 10, 100, 1000, 10000, 100000, 1000000))
    add_io(p)

    p = sub.add_parser("scaling",
                       help="standard vs modified best-step table")
    p.add_argument("--n-min", type=int, dest="n_min", default=2)
    p.add_argument("--n-max", type=int, dest="n_max", default=16)
    p.add_argument("--M", type=int, default=1)
    p.add_argument("--max-qubits", type=int, dest="max_qubits",
                   default=DEFAULT_MAX_QUBITS)
    add_io(p)

    return parser


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    fields = {
        k: v
        for k, v in vars(args).items()
        if k in ExperimentConfig.__dataclass_fields__ and v is not None
    }
    return ExperimentConfig(**fields)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return run(config_from_args(args))


def console_main() -> None:
    raise SystemExit(main())
