"""Dense state vectors, phase oracles, and reflection operators.

Everything downstream builds on four operations defined here: preparing a
uniform superposition, flipping the sign of marked amplitudes, reflecting
a state about an axis, and reading off where a state sits inside the
two-dimensional plane spanned by the normalized superpositions of
non-solutions and solutions.

All operations are pure. Inputs are never mutated and every result is a
fresh array, so traces of long runs can be kept without defensive copies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .config import AXIS_NORM_TOL, DEFAULT_MAX_QUBITS, NORM_TOL
from .errors import (
    CapacityError,
    DegeneratePlaneError,
    NormalizationError,
    ShapeMismatchError,
)


class StateVector:
    """A unit-norm vector of complex amplitudes over the computational basis.

    Instances are treated as immutable: every operation returns a new
    vector and never modifies its inputs. Callers must not mutate the
    wrapped array.
    """

    __slots__ = ("amplitudes",)

    def __init__(self, amplitudes):
        amps = np.array(amplitudes, dtype=np.complex128, copy=True)
        if amps.ndim != 1 or amps.size == 0:
            raise ShapeMismatchError("amplitudes must form a nonempty 1-D array")
        nrm = float(np.linalg.norm(amps))
        if abs(nrm - 1.0) > NORM_TOL:
            raise NormalizationError(
                f"state norm {nrm:.12g} deviates from 1 by more than {NORM_TOL:g}"
            )
        self.amplitudes = amps

    @classmethod
    def _wrap(cls, amps: np.ndarray) -> "StateVector":
        # internal fast path: amps is freshly allocated and unit-norm by
        # construction, so skip the copy and the check
        sv = object.__new__(cls)
        sv.amplitudes = amps
        return sv

    @classmethod
    def basis_state(cls, dim: int, index: int) -> "StateVector":
        """Return the basis vector |index> in a dim-dimensional space."""
        if dim < 1:
            raise ShapeMismatchError("dim must be >= 1")
        if not 0 <= index < dim:
            raise ShapeMismatchError(f"index {index} outside [0, {dim})")
        amps = np.zeros(dim, dtype=np.complex128)
        amps[index] = 1.0
        return cls._wrap(amps)

    @classmethod
    def from_unnormalized(cls, amplitudes) -> "StateVector":
        """Normalize an arbitrary nonzero vector into a StateVector."""
        amps = np.array(amplitudes, dtype=np.complex128, copy=True)
        if amps.ndim != 1 or amps.size == 0:
            raise ShapeMismatchError("amplitudes must form a nonempty 1-D array")
        nrm = float(np.linalg.norm(amps))
        if nrm == 0.0:
            raise NormalizationError("cannot normalize the zero vector")
        return cls._wrap(amps / nrm)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def copy(self) -> "StateVector":
        return StateVector._wrap(self.amplitudes.copy())

    def probabilities(self) -> np.ndarray:
        """Measurement probabilities |amplitude|**2 per basis state."""
        return np.abs(self.amplitudes) ** 2

    def __repr__(self) -> str:
        return f"StateVector(dim={self.dim})"


@dataclass(frozen=True)
class SearchProblem:
    """A search instance: n qubits, N = 2**n items, a nonempty solution set.

    ``marked`` may be given as any iterable of basis-state indices; it is
    stored as a frozenset so problems are hashable and safe to share.
    """

    n: int
    marked: frozenset

    def __init__(self, n: int, marked: Iterable[int]):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "marked", frozenset(int(x) for x in marked))
        if self.n < 1:
            raise CapacityError("n must be >= 1")
        if not self.marked:
            raise DegeneratePlaneError("the solution set must be nonempty")
        if any(not 0 <= x < self.N for x in self.marked):
            raise ShapeMismatchError(
                f"marked indices must lie in [0, {self.N}) for n={self.n}"
            )

    @property
    def N(self) -> int:
        """Total number of items, 2**n."""
        return 1 << self.n

    @property
    def M(self) -> int:
        """Number of solutions."""
        return len(self.marked)

    def marked_indices(self) -> np.ndarray:
        """Sorted solution indices as an integer array, for fancy indexing."""
        return np.fromiter(sorted(self.marked), dtype=np.int64, count=self.M)


class PlaneCoordinates(NamedTuple):
    """Polar position of a state inside the solution / non-solution plane.

    angle:    radians in [0, pi], measured from the non-solution axis,
              after fixing global phase (see decompose_in_plane)
    residual: norm of the component orthogonal to the plane
    """

    angle: float
    residual: float


def uniform_superposition(
    n: int, max_qubits: int = DEFAULT_MAX_QUBITS
) -> StateVector:
    """Prepare the equal superposition of all 2**n basis states."""
    if n < 1:
        raise CapacityError("n must be >= 1")
    if n > max_qubits:
        raise CapacityError(
            f"n={n} exceeds the configured cap of {max_qubits} qubits"
        )
    dim = 1 << n
    amps = np.full(dim, 1.0 / math.sqrt(dim), dtype=np.complex128)
    return StateVector._wrap(amps)


def inner_product(a: StateVector, b: StateVector) -> complex:
    """Return <a|b>, conjugating the left argument."""
    if a.dim != b.dim:
        raise ShapeMismatchError(f"dimensions differ: {a.dim} vs {b.dim}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def reflect_about(axis: StateVector, target: StateVector) -> StateVector:
    """Reflect ``target`` about the ray spanned by ``axis``.

    Implements (2|axis><axis| - I)|target> without ever forming the
    matrix. The axis must be unit norm within AXIS_NORM_TOL.
    """
    if axis.dim != target.dim:
        raise ShapeMismatchError(
            f"dimensions differ: axis {axis.dim} vs target {target.dim}"
        )
    nrm = axis.norm()
    if abs(nrm - 1.0) > AXIS_NORM_TOL:
        raise NormalizationError(
            f"reflection axis norm {nrm:.12g} deviates from 1 "
            f"by more than {AXIS_NORM_TOL:g}"
        )
    overlap = np.vdot(axis.amplitudes, target.amplitudes)
    amps = 2.0 * overlap * axis.amplitudes - target.amplitudes
    return StateVector._wrap(amps)


def apply_oracle(problem: SearchProblem, state: StateVector) -> StateVector:
    """Flip the sign of every amplitude at a solution index."""
    if state.dim != problem.N:
        raise ShapeMismatchError(
            f"state dimension {state.dim} does not match N={problem.N}"
        )
    amps = state.amplitudes.copy()
    idx = problem.marked_indices()
    amps[idx] = -amps[idx]
    return StateVector._wrap(amps)


def nonsolution_axis(problem: SearchProblem) -> StateVector:
    """Normalized equal superposition of the non-solution basis states."""
    if problem.M >= problem.N:
        raise DegeneratePlaneError(
            "every item is a solution; the non-solution axis is undefined"
        )
    amps = np.full(problem.N, 1.0 / math.sqrt(problem.N - problem.M),
                   dtype=np.complex128)
    amps[problem.marked_indices()] = 0.0
    return StateVector._wrap(amps)


def solution_axis(problem: SearchProblem) -> StateVector:
    """Normalized equal superposition of the solution basis states."""
    amps = np.zeros(problem.N, dtype=np.complex128)
    amps[problem.marked_indices()] = 1.0 / math.sqrt(problem.M)
    return StateVector._wrap(amps)


def success_probability(problem: SearchProblem, state: StateVector) -> float:
    """Probability that measuring ``state`` yields a solution index."""
    if state.dim != problem.N:
        raise ShapeMismatchError(
            f"state dimension {state.dim} does not match N={problem.N}"
        )
    idx = problem.marked_indices()
    return float(np.sum(np.abs(state.amplitudes[idx]) ** 2))


def decompose_in_plane(
    problem: SearchProblem, state: StateVector
) -> PlaneCoordinates:
    """Locate ``state`` in the plane spanned by the two search axes.

    The projections a = <nonsolution|state> and b = <solution|state> are
    complex in general. A single global phase is removed by making the
    larger of the two real and nonnegative; the remaining sign freedom
    (the plane cannot distinguish an angle from its negative) is fixed by
    requiring the solution-axis component to be nonnegative, which maps
    every in-plane state to an angle in [0, pi]. States with a = 0
    resolve to pi/2 exactly.

    The residual is the norm of whatever part of ``state`` the plane does
    not capture; in-plane dynamics keep it at the rounding level.
    """
    if state.dim != problem.N:
        raise ShapeMismatchError(
            f"state dimension {state.dim} does not match N={problem.N}"
        )
    if problem.M >= problem.N:
        raise DegeneratePlaneError(
            "every item is a solution; the plane degenerates to a line"
        )
    amps = state.amplitudes
    idx = problem.marked_indices()
    root_m = math.sqrt(problem.M)
    root_nm = math.sqrt(problem.N - problem.M)
    marked_sum = complex(amps[idx].sum())
    a = (complex(amps.sum()) - marked_sum) / root_nm
    b = marked_sum / root_m

    # leftover component outside span{nonsolution, solution}
    rest = amps - (a / root_nm)
    rest[idx] += a / root_nm - b / root_m
    residual = float(np.linalg.norm(rest))

    ref = a if abs(a) >= abs(b) else b
    mag = abs(ref)
    if mag > 0.0:
        u = ref.conjugate() / mag
        ar = (a * u).real + 0.0  # +0.0 normalizes a possible -0.0
        br = (b * u).real + 0.0
    else:
        ar, br = 0.0, 0.0
    if br < 0.0:
        ar, br = -ar + 0.0, -br + 0.0
    angle = math.atan2(br, ar)
    return PlaneCoordinates(angle=angle, residual=residual)
