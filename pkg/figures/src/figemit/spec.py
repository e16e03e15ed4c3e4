"""Figure descriptions and the error vocabulary shared across the package."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

KINDS = ("determinant", "trajectory", "scaling")

# The register sizes that ship together on the determinant figure get
# fixed, mutually distinguishable line styles; any other size falls back
# to dotted so a foreign curve stands out immediately.
DEFAULT_STYLES: dict[int, str] = {5: "--", 7: "-.", 9: "-"}
FALLBACK_STYLE = ":"

_STYLE_CODES = ("-", "--", "-.", ":")
_STYLE_WORDS = {"solid": "-", "dashed": "--", "dashdot": "-.", "dotted": ":"}


class ConfigError(ValueError):
    """A figure description that can never render."""


class InputError(Exception):
    """An input file that is missing, empty, or fails to parse.

    The message always names the file, and the offending line whenever
    one can be pinned down.
    """

    def __init__(self, path, message: str, line: int | None = None):
        self.path = Path(path)
        self.line = line
        where = str(self.path) if line is None else f"{self.path}, line {line}"
        super().__init__(f"{where}: {message}")


def normalize_style(text: str) -> str:
    """Map a style word or code onto the short code the plotter uses."""
    code = _STYLE_WORDS.get(text, text)
    if code not in _STYLE_CODES:
        choices = ", ".join(_STYLE_CODES + tuple(sorted(_STYLE_WORDS)))
        raise ConfigError(f"unknown line style {text!r}; use one of {choices}")
    return code


@dataclass(frozen=True)
class FigureSpec:
    """Everything needed to turn artifact files into one image.

    ``signed`` only matters for the determinant kind, where it switches
    the y data from the absolute value to the raw signed value.
    ``styles`` overrides the per-register-size line styles and is merged
    over the defaults.
    """

    inputs: tuple[Path, ...]
    kind: str
    output: Path
    signed: bool = False
    styles: Mapping[int, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(
                f"unknown figure kind {self.kind!r}; expected one of {', '.join(KINDS)}"
            )
        inputs = tuple(Path(p) for p in self.inputs)
        if not inputs:
            raise ConfigError("at least one input file is required")
        object.__setattr__(self, "inputs", inputs)
        object.__setattr__(self, "output", Path(self.output))
        normalized = {}
        for size, style in dict(self.styles).items():
            if not isinstance(size, int) or isinstance(size, bool) or size < 1:
                raise ConfigError(
                    f"style map keys must be positive register sizes, got {size!r}"
                )
            normalized[size] = normalize_style(style)
        object.__setattr__(self, "styles", normalized)

    def style_for(self, size: int) -> str:
        merged = {**DEFAULT_STYLES, **self.styles}
        return merged.get(size, FALLBACK_STYLE)
