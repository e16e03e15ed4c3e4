"""Loaders for the artifact files, validated against the shared column layouts.

Every number that ends up in a figure comes out of these readers; the
renderers never derive new quantities beyond presentation arithmetic.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .spec import InputError

DETERMINANT_HEADER = ("n", "phi", "det_signed", "det_abs")
TRACE_HEADER = ("step", "predicted_angle", "measured_angle", "success_prob")
TRACE_HEADER_STD = TRACE_HEADER + ("success_prob_std",)
SCALING_HEADER = (
    "n",
    "standard_best_step",
    "modified_best_step",
    "r_mod",
    "iteration_bound",
)


@dataclass(frozen=True)
class DeterminantCurve:
    """One register size's determinant samples, ordered by angle."""

    size: int
    phi: tuple[float, ...]
    det_signed: tuple[float, ...]
    det_abs: tuple[float, ...]


@dataclass(frozen=True)
class Trace:
    """Per-step predicted and measured rotation angles from one run."""

    label: str
    steps: tuple[int, ...]
    predicted: tuple[float, ...]
    measured: tuple[float, ...]


@dataclass(frozen=True)
class ScalingTable:
    sizes: tuple[int, ...]
    standard_steps: tuple[int, ...]
    modified_steps: tuple[int, ...]
    bounds: tuple[int, ...]


def _read_text(path: Path) -> str:
    if not path.exists():
        raise InputError(path, "no such file")
    try:
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(path, f"not a UTF-8 text file: {exc.reason}") from None
    except OSError as exc:
        raise InputError(path, str(exc)) from None


def _load_rows(path: Path, accepted: Sequence[tuple[str, ...]]):
    """Parse a CSV file, returning (header, [(lineno, fields), ...])."""
    text = _read_text(path)
    if not text.strip():
        raise InputError(path, "empty file")
    numbered = [
        (lineno, row)
        for lineno, row in enumerate(csv.reader(text.splitlines()), start=1)
        if row
    ]
    header_line, header_row = numbered[0]
    header = tuple(cell.strip() for cell in header_row)
    if header not in tuple(accepted):
        expected = " or ".join(",".join(h) for h in accepted)
        raise InputError(
            path, f"unexpected header {','.join(header)!r}; expected {expected}",
            line=header_line,
        )
    body = numbered[1:]
    if not body:
        raise InputError(path, "no data rows")
    for lineno, row in body:
        if len(row) != len(header):
            raise InputError(
                path, f"expected {len(header)} fields, found {len(row)}", line=lineno
            )
    return header, body


def _float_cell(path, lineno, column, text) -> float:
    try:
        value = float(text)
    except ValueError:
        raise InputError(
            path, f"column {column!r}: not a number: {text!r}", line=lineno
        ) from None
    if not math.isfinite(value):
        raise InputError(
            path, f"column {column!r}: non-finite value {text!r}", line=lineno
        )
    return value


def _int_cell(path, lineno, column, text) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputError(
            path, f"column {column!r}: not an integer: {text!r}", line=lineno
        ) from None


def load_determinant(paths: Iterable[Path]) -> list[DeterminantCurve]:
    """Read determinant CSVs and group the rows into per-size curves."""
    groups: dict[int, list[tuple[float, float, float]]] = {}
    for path in paths:
        path = Path(path)
        _, body = _load_rows(path, (DETERMINANT_HEADER,))
        for lineno, row in body:
            size = _int_cell(path, lineno, "n", row[0])
            if size < 1:
                raise InputError(
                    path, f"column 'n': must be positive, got {size}", line=lineno
                )
            phi = _float_cell(path, lineno, "phi", row[1])
            det_signed = _float_cell(path, lineno, "det_signed", row[2])
            det_abs = _float_cell(path, lineno, "det_abs", row[3])
            groups.setdefault(size, []).append((phi, det_signed, det_abs))
    curves = []
    for size in sorted(groups):
        points = sorted(groups[size], key=lambda p: p[0])
        curves.append(
            DeterminantCurve(
                size=size,
                phi=tuple(p[0] for p in points),
                det_signed=tuple(p[1] for p in points),
                det_abs=tuple(p[2] for p in points),
            )
        )
    return curves


def _trace_from_csv(path: Path) -> Trace:
    _, body = _load_rows(path, (TRACE_HEADER, TRACE_HEADER_STD))
    steps, predicted, measured = [], [], []
    for lineno, row in body:
        steps.append(_int_cell(path, lineno, "step", row[0]))
        predicted.append(_float_cell(path, lineno, "predicted_angle", row[1]))
        measured.append(_float_cell(path, lineno, "measured_angle", row[2]))
        # validated so corruption is caught even though it is not plotted
        _float_cell(path, lineno, "success_prob", row[3])
    return Trace(path.stem, tuple(steps), tuple(predicted), tuple(measured))


_ENTRY_KEYS = ("step", "predicted_angle", "measured_angle", "success_prob")


def _trace_from_json(path: Path) -> Trace:
    text = _read_text(path)
    if not text.strip():
        raise InputError(path, "empty file")
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(path, exc.msg, line=exc.lineno) from None
    if not isinstance(payload, dict) or "entries" not in payload:
        raise InputError(path, "expected a top-level object with an 'entries' list")
    entries = payload["entries"]
    if not isinstance(entries, list) or not entries:
        raise InputError(path, "'entries' must be a non-empty list")
    steps, predicted, measured = [], [], []
    for index, entry in enumerate(entries):
        if not isinstance(entry, dict):
            raise InputError(path, f"entries[{index}]: expected an object")
        for key in _ENTRY_KEYS:
            value = entry.get(key)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise InputError(
                    path, f"entries[{index}]: key {key!r} missing or not a number"
                )
            if not math.isfinite(value):
                raise InputError(
                    path, f"entries[{index}]: key {key!r} is non-finite"
                )
        steps.append(int(entry["step"]))
        predicted.append(float(entry["predicted_angle"]))
        measured.append(float(entry["measured_angle"]))
    return Trace(path.stem, tuple(steps), tuple(predicted), tuple(measured))


def load_traces(paths: Iterable[Path]) -> list[Trace]:
    """Read run traces, one per file, from CSV or JSON by extension."""
    traces = []
    for path in paths:
        path = Path(path)
        if path.suffix.lower() == ".json":
            traces.append(_trace_from_json(path))
        else:
            traces.append(_trace_from_csv(path))
    return traces


def load_scaling(paths: Iterable[Path]) -> ScalingTable:
    """Read scaling-comparison CSVs and merge them, sorted by size."""
    rows: list[tuple[int, int, int, int]] = []
    for path in paths:
        path = Path(path)
        _, body = _load_rows(path, (SCALING_HEADER,))
        for lineno, row in body:
            size = _int_cell(path, lineno, "n", row[0])
            standard = _int_cell(path, lineno, "standard_best_step", row[1])
            modified = _int_cell(path, lineno, "modified_best_step", row[2])
            _float_cell(path, lineno, "r_mod", row[3])
            bound = _int_cell(path, lineno, "iteration_bound", row[4])
            for column, value in (
                ("standard_best_step", standard),
                ("modified_best_step", modified),
                ("iteration_bound", bound),
            ):
                # step counts go on a log axis, so zero can never plot
                if value < 1:
                    raise InputError(
                        path, f"column {column!r}: must be >= 1, got {value}",
                        line=lineno,
                    )
            rows.append((size, standard, modified, bound))
    rows.sort(key=lambda r: r[0])
    return ScalingTable(
        sizes=tuple(r[0] for r in rows),
        standard_steps=tuple(r[1] for r in rows),
        modified_steps=tuple(r[2] for r in rows),
        bounds=tuple(r[3] for r in rows),
    )
