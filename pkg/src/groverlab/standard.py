"""Textbook amplitude-amplification search with a fixed reflection axis.

One step is a phase oracle followed by a reflection about the initial
uniform superposition. In the solution / non-solution plane the step is a
rotation by theta = 2*arcsin(sqrt(M/N)), so the state after k steps sits
at angle (2k+1)*theta/2 and the success probability is the squared sine
of that angle.
"""

from __future__ import annotations

import math

from .config import DEFAULT_MAX_QUBITS
from .states import (
    SearchProblem,
    StateVector,
    apply_oracle,
    decompose_in_plane,
    reflect_about,
    success_probability,
    uniform_superposition,
)
from .trace import RunTrace, TraceEntry


def theta(problem: SearchProblem) -> float:
    """Per-step rotation angle 2*arcsin(sqrt(M/N))."""
    return 2.0 * math.asin(math.sqrt(problem.M / problem.N))


def predicted_angle(problem: SearchProblem, k: int) -> float:
    """Closed-form plane angle (2k+1)*theta/2 after k steps."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return (2 * k + 1) * theta(problem) / 2.0


def iteration_bound(problem: SearchProblem) -> int:
    """Steps that suffice to reach the first success peak.

    ceil((pi/4)*sqrt(N/M)); the equivalent form ceil(pi/(2*theta)) differs
    by at most one step and only for tiny N, since
    theta ~ 2*sqrt(M/N) for M << N.
    """
    return math.ceil((math.pi / 4.0) * math.sqrt(problem.N / problem.M))


def grover_step(
    state: StateVector, problem: SearchProblem, initial: StateVector
) -> StateVector:
    """Apply one search step: oracle, then reflect about ``initial``."""
    return reflect_about(initial, apply_oracle(problem, state))


def best_step(problem: SearchProblem) -> int:
    """Step index k <= iteration_bound maximizing sin^2((2k+1)*theta/2).

    Ties resolve to the smallest k.
    """
    th = theta(problem)
    bound = iteration_bound(problem)
    best_k = 0
    best_p = -1.0
    for k in range(bound + 1):
        p = math.sin((2 * k + 1) * th / 2.0) ** 2
        if p > best_p:
            best_k, best_p = k, p
    return best_k


def first_peak_step(problem: SearchProblem) -> int:
    """Smallest k whose success probability is not improved by step k+1."""
    th = theta(problem)
    k = 0
    while (
        math.sin((2 * (k + 1) + 1) * th / 2.0) ** 2
        > math.sin((2 * k + 1) * th / 2.0) ** 2
    ):
        k += 1
    return k


def _measured_angle(problem: SearchProblem, state: StateVector) -> float:
    # with every item marked the plane collapses; the state is the
    # solution axis itself, which we report as pi/2
    if problem.M >= problem.N:
        return math.pi / 2.0
    return decompose_in_plane(problem, state).angle


def run_standard(
    problem: SearchProblem,
    max_steps: int | None = None,
    max_qubits: int = DEFAULT_MAX_QUBITS,
) -> RunTrace:
    """Simulate the fixed-axis search and trace every step.

    Runs through ``max_steps`` steps when given, otherwise up to the best
    step within the iteration bound. Step 0 is the prepared state before
    any search step.
    """
    th = theta(problem)
    if max_steps is not None:
        if max_steps < 0:
            raise ValueError("max_steps must be >= 0")
        last = max_steps
    else:
        last = best_step(problem)

    initial = uniform_superposition(problem.n, max_qubits=max_qubits)
    state = initial
    entries = []
    for k in range(last + 1):
        if k > 0:
            state = grover_step(state, problem, initial)
        entries.append(
            TraceEntry(
                step=k,
                predicted_angle=(2 * k + 1) * th / 2.0,
                measured_angle=_measured_angle(problem, state),
                success_prob=success_probability(problem, state),
            )
        )
    return RunTrace(
        algorithm="standard",
        n=problem.n,
        N=problem.N,
        M=problem.M,
        marked=tuple(sorted(problem.marked)),
        entries=entries,
    )
