"""Run traces and their deterministic serialization.

A trace records one experiment step per row: the closed-form predicted
plane angle, the angle measured from the simulated state, and the success
probability. Monte-Carlo runs add a spread column and carry their seed and
trial count in the header so any file can be reproduced exactly.

Serialization is deliberately boring: fixed key order, floats printed with
17 significant digits (enough to round-trip IEEE doubles), LF line
endings, and atomic file replacement. Identical runs produce byte
identical files.
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence


def format_float(x: float) -> str:
    """Render a float with enough digits to round-trip exactly."""
    return format(float(x), ".17g")


@dataclass
class TraceEntry:
    step: int
    predicted_angle: float
    measured_angle: float
    success_prob: float
    success_prob_std: Optional[float] = None


@dataclass
class RunTrace:
    """One experiment run: problem metadata plus a list of step entries."""

    algorithm: str
    n: int
    N: int
    M: int
    marked: tuple
    entries: list = field(default_factory=list)
    seed: Optional[int] = None
    trials: Optional[int] = None
    fidelity: Optional[float] = None

    def best_entry(self) -> TraceEntry:
        """Entry with the highest success probability (first on ties)."""
        best = self.entries[0]
        for e in self.entries[1:]:
            if e.success_prob > best.success_prob:
                best = e
        return best

    def to_json_obj(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "n": self.n,
            "N": self.N,
            "M": self.M,
            "marked": list(self.marked),
            "seed": self.seed,
            "trials": self.trials,
            "fidelity": self.fidelity,
            "entries": [
                {
                    "step": e.step,
                    "predicted_angle": e.predicted_angle,
                    "measured_angle": e.measured_angle,
                    "success_prob": e.success_prob,
                    **(
                        {"success_prob_std": e.success_prob_std}
                        if e.success_prob_std is not None
                        else {}
                    ),
                }
                for e in self.entries
            ],
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2) + "\n"

    def to_csv_text(self) -> str:
        with_std = any(e.success_prob_std is not None for e in self.entries)
        header = ["step", "predicted_angle", "measured_angle", "success_prob"]
        if with_std:
            header.append("success_prob_std")
        rows = []
        for e in self.entries:
            row = [
                str(e.step),
                format_float(e.predicted_angle),
                format_float(e.measured_angle),
                format_float(e.success_prob),
            ]
            if with_std:
                row.append(
                    format_float(e.success_prob_std)
                    if e.success_prob_std is not None
                    else "nan"
                )
            rows.append(row)
        return render_csv(header, rows)

    @staticmethod
    def from_json_obj(obj: dict) -> "RunTrace":
        entries = [
            TraceEntry(
                step=int(e["step"]),
                predicted_angle=float(e["predicted_angle"]),
                measured_angle=float(e["measured_angle"]),
                success_prob=float(e["success_prob"]),
                success_prob_std=(
                    float(e["success_prob_std"])
                    if "success_prob_std" in e
                    else None
                ),
            )
            for e in obj["entries"]
        ]
        return RunTrace(
            algorithm=str(obj["algorithm"]),
            n=int(obj["n"]),
            N=int(obj["N"]),
            M=int(obj["M"]),
            marked=tuple(obj["marked"]),
            entries=entries,
            seed=obj.get("seed"),
            trials=obj.get("trials"),
            fidelity=obj.get("fidelity"),
        )


def render_csv(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """Render pre-formatted string cells as CSV with LF line endings."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(header))
    for row in rows:
        writer.writerow(list(row))
    return buf.getvalue()


def format_cell(value) -> str:
    """Format one table cell: ints verbatim, floats at 17 digits."""
    if value is None:
        return "nan"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def render_table_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    """Render a table of mixed int/float/str cells as deterministic CSV."""
    return render_csv(header, [[format_cell(v) for v in row] for row in rows])


def write_text_atomic(path, text: str) -> None:
    """Write text via a temp file and atomic rename; create parent dirs."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(
        prefix=path.name + ".", suffix=".tmp", dir=str(path.parent)
    )
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def write_trace(trace: RunTrace, path, fmt: str = "json") -> None:
    """Serialize a trace to ``path`` as 'json' or 'csv', atomically."""
    if fmt == "json":
        write_text_atomic(path, trace.to_json_text())
    elif fmt == "csv":
        write_text_atomic(path, trace.to_csv_text())
    else:
        raise ValueError(f"unknown trace format {fmt!r}")


def load_trace_json(path) -> RunTrace:
    with open(path, "r", encoding="utf-8") as fh:
        return RunTrace.from_json_obj(json.load(fh))


def load_trace_csv(path) -> list:
    """Read back the entry rows of a CSV trace (metadata lives in JSON)."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        entries = []
        for row in reader:
            entries.append(
                TraceEntry(
                    step=int(row["step"]),
                    predicted_angle=float(row["predicted_angle"]),
                    measured_angle=float(row["measured_angle"]),
                    success_prob=float(row["success_prob"]),
                    success_prob_std=(
                        float(row["success_prob_std"])
                        if "success_prob_std" in row
                        and row["success_prob_std"] not in (None, "")
                        else None
                    ),
                )
            )
        return entries
