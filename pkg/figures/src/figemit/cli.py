"""Command line front end; flags mirror the FigureSpec fields one to one.

Exit codes: 0 success, 2 unusable configuration, 3 input file problems
(missing, empty, or corrupt, reported with file and line).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import render
from .spec import KINDS, ConfigError, FigureSpec, InputError


def _style_pair(text: str) -> tuple[int, str]:
    size, sep, style = text.partition("=")
    if not sep or not size.strip() or not style.strip():
        raise argparse.ArgumentTypeError(f"expected SIZE=STYLE, got {text!r}")
    try:
        parsed = int(size)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"register size must be an integer, got {size!r}"
        ) from None
    return parsed, style.strip()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figemit",
        description="Render figures from search-dynamics CSV/JSON artifacts.",
    )
    parser.add_argument("--kind", required=True, choices=KINDS,
                        help="figure family to draw")
    parser.add_argument("--input", required=True, action="append", type=Path,
                        metavar="PATH", help="artifact file; repeat for several")
    parser.add_argument("--output", type=Path, metavar="PATH",
                        help="image file to write (default: <kind>.svg)")
    parser.add_argument("--signed", action="store_true",
                        help="determinant only: plot the signed value, not |det|")
    parser.add_argument("--style", action="append", type=_style_pair,
                        default=[], metavar="SIZE=STYLE",
                        help="line style override per register size, e.g. 9=dotted")
    return parser


def _summary(spec: FigureSpec, report) -> str:
    sources = ", ".join(str(p) for p in spec.inputs)
    text = f"{spec.kind}: {len(report.curves)} series from {sources}"
    if report.max_angle_gap is not None:
        text += f", max angle gap {report.max_angle_gap:.3e}"
    return f"{text} -> {report.output}"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    output = args.output if args.output is not None else Path(f"{args.kind}.svg")
    try:
        spec = FigureSpec(
            inputs=tuple(args.input),
            kind=args.kind,
            output=output,
            signed=args.signed,
            styles=dict(args.style),
        )
        report = render(spec)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 3
    print(_summary(spec, report))
    return 0


def console_main() -> None:
    raise SystemExit(main())
