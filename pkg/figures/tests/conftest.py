"""Shared fixtures: real artifact files produced by the simulation CLI.

The emitter is exercised only through its public surface, and its inputs
come from actual `python -m groverlab` runs rather than hand-built
imitations of the file formats, so these tests double as a contract
check on the shared schemas.
"""

import subprocess
import sys

import pytest

pytest.importorskip("figemit")


def _produce(directory, *args):
    subprocess.run(
        [sys.executable, "-m", "groverlab", *args],
        cwd=directory,
        check=True,
        capture_output=True,
    )


@pytest.fixture(scope="session")
def artifacts(tmp_path_factory):
    out = tmp_path_factory.mktemp("artifacts")
    _produce(out, "determinant", "--n-list", "5,7,9", "--grid", "200",
             "--output", "det.csv")
    _produce(out, "determinant", "--n-list", "6", "--grid", "60",
             "--output", "det6.csv")
    # capped at the last step whose angle stays inside [0, pi]; past it
    # the canonical measured angle and the unwrapped prediction name the
    # same rotation with different representatives
    _produce(out, "modified", "--n", "10", "--max-steps", "4",
             "--output", "trace.csv")
    _produce(out, "modified", "--n", "10", "--max-steps", "4",
             "--format", "json", "--output", "trace.json")
    _produce(out, "modified", "--n", "10", "--output", "trace_folded.csv")
    _produce(out, "degraded", "--n", "5", "--trials", "20", "--seed", "7",
             "--output", "degraded.csv")
    _produce(out, "scaling", "--n-min", "2", "--n-max", "12",
             "--output", "scaling.csv")
    return out
