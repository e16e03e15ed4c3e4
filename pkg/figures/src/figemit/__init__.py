"""Deterministic figure emitter for search-dynamics artifact files.

Consumes the CSV/JSON files written by the simulation CLI and renders
three figure families: clone-family determinant curves, predicted vs
measured angle trajectories, and the standard vs modified step-count
scaling comparison. It never recomputes any of those numbers.
"""

from .readers import (
    DeterminantCurve,
    ScalingTable,
    Trace,
    load_determinant,
    load_scaling,
    load_traces,
)
from .render import CurveInfo, FigureReport, render
from .spec import (
    DEFAULT_STYLES,
    KINDS,
    ConfigError,
    FigureSpec,
    InputError,
    normalize_style,
)

__all__ = [
    "ConfigError",
    "CurveInfo",
    "DEFAULT_STYLES",
    "DeterminantCurve",
    "FigureReport",
    "FigureSpec",
    "InputError",
    "KINDS",
    "ScalingTable",
    "Trace",
    "load_determinant",
    "load_scaling",
    "load_traces",
    "normalize_style",
    "render",
]
