"""Cloning side of the story: when copying a search-state family is
linear-algebraically possible, how good the best universal copy is, and
what an imperfect copy does to the reflect-about-current-state search.

The single-solution search states {cos(phi)|nonsolution_x> +
sin(phi)|solution_x>}, one per solution index x, induce an N x N
coefficient matrix with sin(phi) on the diagonal and cos(phi)/sqrt(N-1)
elsewhere. Its determinant factors as (a - b)**(N-1) * (a + (N-1) b)
with a = sin(phi), b = cos(phi)/sqrt(N-1), so the family degenerates
exactly at tan(phi) = 1/sqrt(N-1), i.e. sin(phi) = 1/sqrt(N): the angle
of the uniform superposition, where all members coincide. Linear
independence everywhere else is what probabilistic exact cloning needs,
and the determinant stays near zero for most of the angle range.

The best state-independent copier reaches fidelity F(N) = (N+3)/(2(N+1)),
barely above the 1/2 of a random guess for large N. run_degraded_modified
feeds copies of that quality to the modified search as reflection axes
and records what survives of the speedup.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .config import DEFAULT_DENSE_CAP, DEFAULT_MAX_QUBITS, DEFAULT_SEED
from .errors import CapacityError
from .modified import best_step_modified
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


@dataclass(frozen=True)
class StateFamilySpec:
    """Family of N single-solution search states at a common plane angle.

    N is the dimension (one family member per solution index) and phi
    the shared angle in [0, pi/2]. Members with multiple solutions are
    not representable here: the coefficient matrix below is specific to
    one solution per member.
    """

    N: int
    phi: float

    def __post_init__(self):
        if self.N < 2:
            raise ValueError("N must be >= 2")
        if not 0.0 <= self.phi <= math.pi / 2.0 + 1e-12:
            raise ValueError("phi must lie in [0, pi/2]")

    @property
    def diagonal(self) -> float:
        return math.sin(self.phi)

    @property
    def off_diagonal(self) -> float:
        return math.cos(self.phi) / math.sqrt(self.N - 1)


def family_matrix(
    spec: StateFamilySpec, dense_cap: int = DEFAULT_DENSE_CAP
) -> np.ndarray:
    """Dense coefficient matrix of the family; column x is member x."""
    if spec.N > dense_cap:
        raise CapacityError(
            f"N={spec.N} exceeds the dense matrix cap of {dense_cap}"
        )
    m = np.full((spec.N, spec.N), spec.off_diagonal, dtype=np.float64)
    np.fill_diagonal(m, spec.diagonal)
    return m


def family_determinant_numeric(
    spec: StateFamilySpec, dense_cap: int = DEFAULT_DENSE_CAP
) -> float:
    """Determinant via LU factorization with partial pivoting.

    The sign of the pivot permutation is tracked explicitly and applied
    to the product of the U diagonal.
    """
    m = family_matrix(spec, dense_cap=dense_cap)
    lu, piv = scipy.linalg.lu_factor(m, check_finite=False)
    swaps = int(np.sum(piv != np.arange(spec.N)))
    sign = -1.0 if swaps % 2 else 1.0
    return sign * float(np.prod(np.diagonal(lu)))


def family_determinant_closed(spec: StateFamilySpec) -> float:
    """Determinant in closed form: (a-b)**(N-1) * (a + (N-1) b)."""
    a = spec.diagonal
    b = spec.off_diagonal
    return (a - b) ** (spec.N - 1) * (a + (spec.N - 1) * b)


def independence_boundary(N: int) -> float:
    """Angle where the family degenerates: arctan(1/sqrt(N-1)).

    Equals arcsin(1/sqrt(N)), the plane angle of the uniform
    superposition for a single-solution search.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    return math.atan(1.0 / math.sqrt(N - 1))


def determinant_curve(
    n_values,
    grid: int = 200,
    method: str = "closed",
    dense_cap: int = DEFAULT_DENSE_CAP,
) -> list:
    """Tabulate the signed determinant over phi in [0, pi/2].

    ``n_values`` are qubit counts (dimension 2**n per curve); ``grid``
    points are evaluated per curve. ``method`` selects the closed form
    (default) or 'lu' for the factorization route; the two agree to
    1e-10 relative on every tested size. Returns (n, phi, det) tuples.
    """
    if grid < 50:
        raise ValueError("grid must be >= 50")
    if method not in ("closed", "lu"):
        raise ValueError(f"unknown determinant method {method!r}")
    n_values = [int(n) for n in n_values]
    for n in n_values:
        if n < 2:
            raise ValueError("each qubit count must be >= 2")
        if (1 << n) > dense_cap:
            raise CapacityError(
                f"N={1 << n} exceeds the dense matrix cap of {dense_cap}"
            )
    rows = []
    for n in n_values:
        for phi in np.linspace(0.0, math.pi / 2.0, grid):
            spec = StateFamilySpec(N=1 << n, phi=float(phi))
            det = (
                family_determinant_closed(spec)
                if method == "closed"
                else family_determinant_numeric(spec, dense_cap=dense_cap)
            )
            rows.append((n, float(phi), det))
    return rows


@dataclass(frozen=True)
class CloneQuality:
    """Best universal-copier quality for an N-dimensional input."""

    N: int
    scaling_factor: float
    fidelity: float


def clone_quality(N: int) -> CloneQuality:
    """Scaling factor (N+2)/(2(N+1)) and copy fidelity (N+3)/(2(N+1)).

    The fidelity sits above one half by exactly 1/(N+1), so the best
    possible copy of a large search state is barely better than a coin
    flip.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    s = (N + 2.0) / (2.0 * (N + 1.0))
    f = (N + 3.0) / (2.0 * (N + 1.0))
    return CloneQuality(N=N, scaling_factor=s, fidelity=f)


def _perturbed_axis(
    state: StateVector, fidelity: float, rng: np.random.Generator
) -> StateVector:
    # unit vector at squared overlap `fidelity` with `state`, direction
    # drawn uniformly from the orthogonal complement
    z = rng.standard_normal(state.dim) + 1j * rng.standard_normal(state.dim)
    z -= np.vdot(state.amplitudes, z) * state.amplitudes
    w = z / np.linalg.norm(z)
    amps = (
        math.sqrt(fidelity) * state.amplitudes
        + math.sqrt(1.0 - fidelity) * w
    )
    return StateVector._wrap(amps)


def run_degraded_modified(
    problem: SearchProblem,
    trials: int,
    seed: int = DEFAULT_SEED,
    fidelity: float | None = None,
    max_steps: int | None = None,
    max_qubits: int = DEFAULT_MAX_QUBITS,
) -> RunTrace:
    """Monte-Carlo modified search with imperfect reflection axes.

    Each step reflects about a degraded copy of the current state: a
    unit vector with squared overlap ``fidelity`` against it, the
    perturbation direction drawn uniformly from the orthogonal
    complement and redrawn every step and trial. The default fidelity is
    clone_quality(N).fidelity, the best a universal copier can do. At
    fidelity 1.0 the perturbation branch is skipped entirely, so every
    trial reproduces the ideal run bit for bit.

    Per-trial streams derive from (seed, trial index); results depend
    only on (problem, trials, seed, fidelity, step count). Entries carry
    the mean success probability per step, its population spread, and
    the mean measured angle.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    f = (
        clone_quality(problem.N).fidelity
        if fidelity is None
        else float(fidelity)
    )
    if not 0.0 <= f <= 1.0:
        raise ValueError("fidelity must lie in [0, 1]")
    th = theta(problem)
    if max_steps is not None:
        if max_steps < 0:
            raise ValueError("max_steps must be >= 0")
        last = max_steps
    else:
        last = best_step_modified(problem)

    success = np.empty((trials, last + 1), dtype=np.float64)
    angle = np.empty((trials, last + 1), dtype=np.float64)
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        state = uniform_superposition(problem.n, max_qubits=max_qubits)
        for l in range(last + 1):
            if l > 0:
                axis = state if f >= 1.0 else _perturbed_axis(state, f, rng)
                state = reflect_about(axis, apply_oracle(problem, state))
            success[t, l] = success_probability(problem, state)
            angle[t, l] = _measured_angle(problem, state)

    entries = []
    for l in range(last + 1):
        entries.append(
            TraceEntry(
                step=l,
                predicted_angle=(3.0**l) * th / 2.0,
                measured_angle=float(np.mean(angle[:, l])),
                success_prob=float(np.mean(success[:, l])),
                success_prob_std=float(np.std(success[:, l])),
            )
        )
    return RunTrace(
        algorithm="degraded",
        n=problem.n,
        N=problem.N,
        M=problem.M,
        marked=tuple(sorted(problem.marked)),
        entries=entries,
        seed=seed,
        trials=trials,
        fidelity=f,
    )
