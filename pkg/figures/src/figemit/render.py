"""Renderers that turn parsed artifact files into deterministic images.

Rendering is a pure function of the input bytes and the figure
description: element ids are salted with a fixed string, text stays as
text, and the formats that would stamp a date have it suppressed, so
repeated renders of the same inputs produce byte-identical files.
"""

from __future__ import annotations

import math
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

from matplotlib.figure import Figure
from matplotlib.ticker import MaxNLocator

from .readers import load_determinant, load_scaling, load_traces
from .spec import ConfigError, FigureSpec

_RC = {
    "svg.hashsalt": "figemit",
    # keep labels and annotations as literal text, not glyph outlines
    "svg.fonttype": "none",
}

# formats whose default metadata embeds a timestamp, and the key to blank
_METADATA_BLANKS = {
    ".svg": {"Date": None},
    ".pdf": {"CreationDate": None},
    ".png": {"Software": None},
}


@dataclass(frozen=True)
class CurveInfo:
    """One plotted series: its legend label, style, and final point."""

    label: str
    style: str
    points: int
    last_x: float
    last_y: float


@dataclass(frozen=True)
class FigureReport:
    """What ended up in the image, for callers that want to check it."""

    output: Path
    kind: str
    curves: tuple[CurveInfo, ...]
    xlim: tuple[float, float]
    ylim: tuple[float, float]
    log_y: bool = False
    annotation: str | None = None
    max_angle_gap: float | None = None


def render(spec: FigureSpec) -> FigureReport:
    """Draw the figure described by ``spec`` and write its output file.

    Inputs are fully parsed before the output path is touched, and the
    image is written atomically, so a failing render leaves no partial
    file behind.
    """
    with matplotlib.rc_context(_RC):
        fig = Figure(figsize=(6.4, 4.8), dpi=100)
        ax = fig.add_subplot()
        if spec.kind == "determinant":
            report = _draw_determinant(spec, ax)
        elif spec.kind == "trajectory":
            report = _draw_trajectory(spec, ax)
        else:
            report = _draw_scaling(spec, ax)
        fig.tight_layout()
        _save(fig, spec.output)
    return report


def _save(fig, output: Path):
    suffix = output.suffix.lower()
    metadata = _METADATA_BLANKS.get(suffix)
    if metadata is None:
        raise ConfigError(
            f"unsupported output format {suffix or output.name!r}; use .svg, .pdf, or .png"
        )
    parent = output.parent if str(output.parent) else Path(".")
    parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=parent, suffix=suffix)
    try:
        with os.fdopen(fd, "wb") as handle:
            fig.savefig(handle, format=suffix[1:], metadata=metadata)
    except BaseException:
        os.unlink(tmp)
        raise
    os.replace(tmp, output)


def _draw_determinant(spec: FigureSpec, ax) -> FigureReport:
    curves = load_determinant(spec.inputs)
    infos = []
    for curve in curves:
        ys = curve.det_signed if spec.signed else curve.det_abs
        style = spec.style_for(curve.size)
        label = f"n = {curve.size}"
        ax.plot(curve.phi, ys, style, label=label, linewidth=1.4)
        infos.append(CurveInfo(label, style, len(curve.phi), curve.phi[-1], ys[-1]))
    ax.set_xlim(0.0, math.pi / 2.0)
    if spec.signed:
        ax.axhline(0.0, color="0.7", linewidth=0.8)
    else:
        ax.set_ylim(0.0, 1.0)
    ax.set_xlabel("family angle phi (radians)")
    ax.set_ylabel("det" if spec.signed else "|det|")
    ax.set_title("Clone-family determinant across register sizes")
    ax.legend()
    return FigureReport(
        output=Path(spec.output),
        kind=spec.kind,
        curves=tuple(infos),
        xlim=tuple(ax.get_xlim()),
        ylim=tuple(ax.get_ylim()),
    )


def _draw_trajectory(spec: FigureSpec, ax) -> FigureReport:
    traces = load_traces(spec.inputs)
    many = len(traces) > 1
    infos = []
    gap = 0.0
    for trace in traces:
        prefix = f"{trace.label}: " if many else ""
        predicted_label = f"{prefix}predicted"
        measured_label = f"{prefix}measured"
        ax.plot(trace.steps, trace.predicted, "-", label=predicted_label,
                linewidth=1.4)
        ax.plot(trace.steps, trace.measured, "o", label=measured_label,
                markersize=4.5, markerfacecolor="none")
        gap = max(
            gap,
            max(abs(p - m) for p, m in zip(trace.predicted, trace.measured)),
        )
        last_step = float(trace.steps[-1])
        infos.append(CurveInfo(predicted_label, "-", len(trace.steps),
                               last_step, trace.predicted[-1]))
        infos.append(CurveInfo(measured_label, "o", len(trace.steps),
                               last_step, trace.measured[-1]))
    note = f"max |predicted - measured| = {gap:.3e}"
    ax.text(0.02, 0.98, note, transform=ax.transAxes, ha="left", va="top",
            fontsize=9)
    ax.set_xlabel("step")
    ax.set_ylabel("angle (radians)")
    ax.set_title("Predicted vs measured rotation angle")
    ax.xaxis.set_major_locator(MaxNLocator(integer=True))
    ax.legend(loc="lower right", fontsize=9)
    return FigureReport(
        output=Path(spec.output),
        kind=spec.kind,
        curves=tuple(infos),
        xlim=tuple(ax.get_xlim()),
        ylim=tuple(ax.get_ylim()),
        annotation=note,
        max_angle_gap=gap,
    )


def _draw_scaling(spec: FigureSpec, ax) -> FigureReport:
    table = load_scaling(spec.inputs)
    series = (
        ("standard best step", "o-", table.standard_steps),
        ("modified best step", "s--", table.modified_steps),
        ("standard iteration bound", ":", table.bounds),
    )
    infos = []
    for label, style, values in series:
        extra = {"color": "0.5", "linewidth": 1.2} if label.endswith("bound") \
            else {"linewidth": 1.4, "markersize": 4.0}
        ax.plot(table.sizes, values, style, label=label, **extra)
        infos.append(CurveInfo(label, style, len(table.sizes),
                               float(table.sizes[-1]), float(values[-1])))
    ax.set_yscale("log")
    ax.set_xlabel("register size n (qubits)")
    ax.set_ylabel("step count")
    ax.set_title("Best step count, standard vs modified search")
    ax.xaxis.set_major_locator(MaxNLocator(integer=True))
    ax.legend()
    return FigureReport(
        output=Path(spec.output),
        kind=spec.kind,
        curves=tuple(infos),
        xlim=tuple(ax.get_xlim()),
        ylim=tuple(ax.get_ylim()),
        log_y=True,
    )
