"""Search variant that reflects about the current state instead of a
fixed axis.

Replacing the initial-superposition reflection with a reflection about
the pre-oracle current state turns each step into an angle tripling: a
state at plane angle phi moves to 3*phi, because the oracle sends phi to
-phi and reflecting about the axis at phi maps -phi to 3*phi. Starting
from theta/2 the angle after l steps is 3**l * theta/2, so roughly
log3(pi/theta) steps reach the success peak, exponentially fewer than the
fixed-axis search needs.

Nothing here constructs the reflection unitarily from the unknown state;
the simulation simply reuses the classical amplitude array as the axis.
That shortcut is exactly what makes the step physically suspect, and the
reflection_machine module quantifies the obstruction.
"""

from __future__ import annotations

import math

from .config import DEFAULT_MAX_QUBITS
from .standard import _measured_angle, theta
from .states import (
    SearchProblem,
    StateVector,
    apply_oracle,
    reflect_about,
    success_probability,
    uniform_superposition,
)
from .trace import RunTrace, TraceEntry


def modified_step(state: StateVector, problem: SearchProblem) -> StateVector:
    """Apply the oracle, then reflect about the pre-oracle state."""
    return reflect_about(state, apply_oracle(problem, state))


def r_mod(problem: SearchProblem) -> float:
    """Step count log3(pi/theta) at which the tripled angle reaches pi/2.

    Returns 0.0 when every item is marked (theta = pi, nothing to do).
    """
    return math.log(math.pi / theta(problem), 3.0)


def best_step_modified(problem: SearchProblem) -> int:
    """Step l <= ceil(r_mod) + 1 maximizing sin^2(3**l * theta/2).

    The tripled angle overshoots pi/2 between consecutive steps, so the
    candidate window extends one step past ceil(r_mod). Ties resolve to
    the smallest l.
    """
    th = theta(problem)
    limit = math.ceil(r_mod(problem)) + 1
    best_l = 0
    best_p = -1.0
    for l in range(limit + 1):
        p = math.sin((3.0**l) * th / 2.0) ** 2
        if p > best_p:
            best_l, best_p = l, p
    return best_l


def run_modified(
    problem: SearchProblem,
    max_steps: int | None = None,
    max_qubits: int = DEFAULT_MAX_QUBITS,
) -> RunTrace:
    """Simulate the reflect-about-current-state search and trace it.

    Runs through ``max_steps`` steps when given, otherwise up to the best
    step within ceil(r_mod) + 1.
    """
    th = theta(problem)
    if max_steps is not None:
        if max_steps < 0:
            raise ValueError("max_steps must be >= 0")
        last = max_steps
    else:
        last = best_step_modified(problem)

    state = uniform_superposition(problem.n, max_qubits=max_qubits)
    entries = []
    for l in range(last + 1):
        if l > 0:
            state = modified_step(state, problem)
        entries.append(
            TraceEntry(
                step=l,
                predicted_angle=(3.0**l) * th / 2.0,
                measured_angle=_measured_angle(problem, state),
                success_prob=success_probability(problem, state),
            )
        )
    return RunTrace(
        algorithm="modified",
        n=problem.n,
        N=problem.N,
        M=problem.M,
        marked=tuple(sorted(problem.marked)),
        entries=entries,
    )
