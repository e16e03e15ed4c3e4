"""Feasibility analysis for a machine that reflects about an unknown state.

The question: does a fixed unitary U on a control-target pair exist with
U(|chi> @ |phi>) behaving, on the target side, like the reflection
(2|chi><chi| - I)|phi> for every control |chi| in some family?

Two independent probes are implemented.

Linear-algebra probe: demanding exact reflection for two controls with
overlap c forces the machine's images to reproduce that overlap in two
different ways, each implying a value for an auxiliary overlap t. The two
implied values, t1 = c/(2|c|^2 - 1) and t2 = c/(4|c|^2 - 3), agree only
at |c| in {0, 1}, so no exact machine covers any richer control family.

Numerical probe: optimize U over the full unitary group to minimize the
mean reflection infidelity on a sample of control-target pairs. Control
families with overlap 0 or 1 admit exact machines (closed forms below);
anything else bottoms out at a strictly positive residual.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import scipy.linalg
import scipy.optimize

from .config import AXIS_NORM_TOL, DEFAULT_SEED
from .errors import NormalizationError, ShapeMismatchError
from .states import StateVector, inner_product

# implied-overlap denominators vanish at |c|^2 = 1/2 and 3/4; points this
# close to a pole are reported as singular rather than as huge numbers
SINGULAR_TOL = 1e-12


@dataclass(frozen=True)
class OverlapConstraint:
    """Implied auxiliary overlaps for a control pair with overlap c.

    t1 or t2 is None when |c| sits on the corresponding pole, and the
    discrepancy |t1 - t2| is None whenever either value is undefined.
    """

    c: complex
    t1: Optional[complex]
    t2: Optional[complex]
    discrepancy: Optional[float]

    @property
    def singular(self) -> bool:
        return self.t1 is None or self.t2 is None


def implied_control_overlaps(c) -> OverlapConstraint:
    """Evaluate both implied auxiliary overlaps for control overlap ``c``."""
    c = complex(c)
    if abs(c) > 1.0 + 1e-12:
        raise ValueError(
            f"|c| = {abs(c):.12g} exceeds 1; unit states cannot overlap more"
        )
    m2 = abs(c) ** 2
    t1 = None if abs(m2 - 0.5) <= SINGULAR_TOL else c / (2.0 * m2 - 1.0)
    t2 = None if abs(m2 - 0.75) <= SINGULAR_TOL else c / (4.0 * m2 - 3.0)
    disc = abs(t1 - t2) if t1 is not None and t2 is not None else None
    return OverlapConstraint(c=c, t1=t1, t2=t2, discrepancy=disc)


@dataclass(frozen=True)
class ScanPoint:
    c_abs: float
    discrepancy: Optional[float]
    singular: bool


def consistency_scan(resolution: int) -> list:
    """Tabulate the implied-overlap discrepancy on a uniform grid of |c|.

    Returns ``resolution`` points covering [0, 1] inclusive. Points on a
    pole of either implied overlap carry discrepancy None and a singular
    flag instead of an arbitrarily large number.
    """
    if resolution < 10:
        raise ValueError("resolution must be >= 10")
    points = []
    for c in np.linspace(0.0, 1.0, resolution):
        oc = implied_control_overlaps(float(c))
        points.append(
            ScanPoint(
                c_abs=float(c),
                discrepancy=oc.discrepancy,
                singular=oc.singular,
            )
        )
    return points


def scan_zero_set(points: Sequence[ScanPoint], tol: float = 1e-9) -> list:
    """Grid values whose discrepancy vanishes within ``tol``."""
    return [
        p.c_abs
        for p in points
        if not p.singular and p.discrepancy is not None and p.discrepancy < tol
    ]


# ---------------------------------------------------------------------------
# reflection fidelity of a candidate machine


def reflection_unitary(chi: StateVector) -> np.ndarray:
    """Dense matrix of the reflection 2|chi><chi| - I."""
    v = chi.amplitudes
    return 2.0 * np.outer(v, v.conj()) - np.eye(v.shape[0])


def single_control_machine(chi: StateVector) -> np.ndarray:
    """Exact machine for the one-element control family {chi}.

    The control register is ignored and the target is reflected directly:
    U = I (x) (2|chi><chi| - I).
    """
    return np.kron(np.eye(chi.dim), reflection_unitary(chi))


def basis_controlled_machine(d: int) -> np.ndarray:
    """Exact machine for the orthonormal-basis control family of C^d.

    Reads the control in the computational basis and reflects the target
    about the matching basis vector: sum_i |i><i| (x) (2|i><i| - I).
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    blocks = []
    for i in range(d):
        blocks.append(
            reflection_unitary(StateVector.basis_state(d, i))
        )
    return scipy.linalg.block_diag(*blocks)


def _desired_reflection(chi: np.ndarray, phi: np.ndarray) -> np.ndarray:
    # (2|chi><chi| - I)|phi>, unit norm by construction for unit inputs
    out = 2.0 * np.vdot(chi, phi) * chi - phi
    nrm = np.linalg.norm(out)
    assert abs(nrm - 1.0) < 1e-9, "reflection of a unit state must stay unit"
    return out


def _sample_arrays(samples) -> list:
    prepared = []
    for chi, phi in samples:
        if chi.dim != phi.dim:
            raise ShapeMismatchError(
                f"control dim {chi.dim} differs from target dim {phi.dim}"
            )
        joint = np.kron(chi.amplitudes, phi.amplitudes)
        desired = _desired_reflection(chi.amplitudes, phi.amplitudes)
        prepared.append((joint, desired.conj(), chi.dim))
    return prepared


def _mean_infidelity(u: np.ndarray, prepared: Sequence) -> float:
    # fidelity of the reduced target state against the desired reflection:
    # trace over the control comes down to summing |<desired|row_c>|^2
    # over the control index c of the reshaped joint output
    total = 0.0
    for joint, desired_conj, d in prepared:
        out = (u @ joint).reshape(d, d)
        amps = out @ desired_conj
        total += float(np.real(np.vdot(amps, amps)))
    return 1.0 - total / len(prepared)


def unitarity_error(u: np.ndarray) -> float:
    """Max-entry deviation of U*U from the identity."""
    u = np.asarray(u, dtype=np.complex128)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ShapeMismatchError("U must be a square matrix")
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))


def reflection_residual(u: np.ndarray, samples: Sequence) -> float:
    """Mean reflection infidelity of machine ``u`` on (control, target) pairs.

    ``u`` acts on the d*d-dimensional control-target space, controls come
    first in the tensor order. For each pair the target register's reduced
    state is compared with the ideal reflection; the result is
    1 - mean fidelity, in [0, 1].
    """
    u = np.asarray(u, dtype=np.complex128)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ShapeMismatchError("U must be a square matrix")
    if not samples:
        raise ValueError("samples must be nonempty")
    d = samples[0][0].dim
    if u.shape[0] != d * d:
        raise ShapeMismatchError(
            f"U is {u.shape[0]}x{u.shape[0]} but controls have dim {d}"
        )
    err = unitarity_error(u)
    if err > AXIS_NORM_TOL:
        raise NormalizationError(
            f"U deviates from unitarity by {err:.3g} (limit {AXIS_NORM_TOL:g})"
        )
    return _mean_infidelity(u, _sample_arrays(samples))


# ---------------------------------------------------------------------------
# optimization over the unitary group


def _haar_unitary(m: int, rng: np.random.Generator) -> np.ndarray:
    z = (rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m)))
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r)
    return q * (diag / np.abs(diag))


def _antihermitian(x: np.ndarray, m: int) -> np.ndarray:
    a = np.zeros((m, m), dtype=np.complex128)
    a[np.diag_indices(m)] = 1j * x[:m]
    iu = np.triu_indices(m, k=1)
    k = m + iu[0].size
    re = x[m:k]
    im = x[k:]
    a[iu] = re + 1j * im
    a[(iu[1], iu[0])] = -re + 1j * im
    return a


def _project_unitary(u: np.ndarray) -> np.ndarray:
    w, _, vh = np.linalg.svd(u)
    return w @ vh


@dataclass(frozen=True)
class ReflectionMachineProblem:
    """A control family, a target sample, and the joint dimension."""

    d: int
    controls: tuple
    targets: tuple

    def samples(self) -> list:
        return [(chi, phi) for chi in self.controls for phi in self.targets]

    def control_overlaps(self) -> list:
        """|<chi_i|chi_j>| for every control pair i < j."""
        out = []
        for i in range(len(self.controls)):
            for j in range(i + 1, len(self.controls)):
                out.append(
                    abs(inner_product(self.controls[i], self.controls[j]))
                )
        return out


@dataclass
class ReflectionMachineResult:
    """Best machine found by the multi-start optimizer."""

    d: int
    control_overlaps: list
    best_residual: float
    unitary: np.ndarray
    converged: bool
    starts: int
    iterations: int
    seed: int
    residual_history: list
    max_unitarity_error: float

    def to_json_obj(self) -> dict:
        return {
            "d": self.d,
            "control_overlaps": [float(x) for x in self.control_overlaps],
            "best_residual": self.best_residual,
            "converged": self.converged,
            "starts": self.starts,
            "iterations": self.iterations,
            "seed": self.seed,
            "residual_history": [float(x) for x in self.residual_history],
        }


def optimize_reflection_machine(
    d: int,
    controls: Sequence[StateVector],
    targets: Sequence[StateVector],
    starts: int = 20,
    seed: int = DEFAULT_SEED,
    rounds: int = 3,
    maxiter: int = 250,
    target_residual: Optional[float] = None,
) -> ReflectionMachineResult:
    """Search the unitary group for the best reflection machine.

    Each restart draws a Haar-random unitary U0 from a stream seeded by
    (seed, restart index) and refines it with BFGS on the chart
    U = U0 expm(A), A anti-Hermitian; after each round the chart is
    recentered at the projected iterate. The recorded best residual is
    non-increasing across restarts. Restarts stop early once the record
    drops below ``target_residual``, when given.

    The convergence flag reports whether the winning restart's final
    round either satisfied the optimizer's own termination test or had
    stalled (round-to-round improvement below 1e-10); a False value means
    the iteration budget ran out while still improving.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    if not controls:
        raise ValueError("controls must be nonempty")
    if not targets:
        raise ValueError("targets must be nonempty")
    if starts < 1:
        raise ValueError("starts must be >= 1")
    for s in list(controls) + list(targets):
        if s.dim != d:
            raise ShapeMismatchError(f"state dim {s.dim} does not match d={d}")

    problem = ReflectionMachineProblem(
        d=d, controls=tuple(controls), targets=tuple(targets)
    )
    prepared = _sample_arrays(problem.samples())
    m = d * d
    nparams = m * m

    def objective(x: np.ndarray, u0: np.ndarray) -> float:
        u = u0 @ scipy.linalg.expm(_antihermitian(x, m))
        return _mean_infidelity(u, prepared)

    best_residual = math.inf
    best_u = None
    best_flag = False
    total_iters = 0
    history = []
    max_unit_err = 0.0

    for start in range(starts):
        rng = np.random.default_rng([seed, start])
        u = _haar_unitary(m, rng)
        prev = math.inf
        value = _mean_infidelity(u, prepared)
        flag = False
        for _ in range(rounds):
            res = scipy.optimize.minimize(
                objective,
                np.zeros(nparams),
                args=(u,),
                method="BFGS",
                options={"maxiter": maxiter, "gtol": 1e-10},
            )
            total_iters += int(res.nit)
            u = _project_unitary(
                u @ scipy.linalg.expm(_antihermitian(res.x, m))
            )
            max_unit_err = max(max_unit_err, unitarity_error(u))
            value = _mean_infidelity(u, prepared)
            stalled = prev - value < 1e-10
            flag = bool(res.success) or stalled
            if stalled:
                break
            prev = value
        if value < best_residual:
            best_residual = value
            best_u = u
            best_flag = flag
        history.append(best_residual)
        if target_residual is not None and best_residual < target_residual:
            break

    return ReflectionMachineResult(
        d=d,
        control_overlaps=problem.control_overlaps(),
        best_residual=float(best_residual),
        unitary=best_u,
        converged=best_flag,
        starts=len(history),
        iterations=total_iters,
        seed=seed,
        residual_history=history,
        max_unitarity_error=max_unit_err,
    )


# ---------------------------------------------------------------------------
# benchmark families


def benchmark_controls(case: str, d: int = 2, overlap: float = 0.9) -> list:
    """Control families used throughout the docs and tests.

    'single':     one basis control, exactly solvable
    'orthogonal': the full computational basis, exactly solvable
    'overlap':    two real controls with the given inner product, the
                  obstructed case
    """
    if case == "single":
        return [StateVector.basis_state(d, 0)]
    if case == "orthogonal":
        return [StateVector.basis_state(d, i) for i in range(d)]
    if case == "overlap":
        if not 0.0 <= overlap <= 1.0:
            raise ValueError("overlap must lie in [0, 1]")
        amps = np.zeros(d, dtype=np.complex128)
        amps[0] = overlap
        amps[1] = math.sqrt(1.0 - overlap * overlap)
        return [StateVector.basis_state(d, 0), StateVector(amps)]
    raise ValueError(f"unknown control family {case!r}")


def benchmark_targets(d: int = 2) -> list:
    """A fixed spanning set of targets: the basis plus two mixtures."""
    targets = [StateVector.basis_state(d, i) for i in range(d)]
    plus = np.zeros(d, dtype=np.complex128)
    plus[0] = plus[1] = 1.0 / math.sqrt(2.0)
    targets.append(StateVector(plus))
    plusi = np.zeros(d, dtype=np.complex128)
    plusi[0] = 1.0 / math.sqrt(2.0)
    plusi[1] = 1j / math.sqrt(2.0)
    targets.append(StateVector(plusi))
    return targets
