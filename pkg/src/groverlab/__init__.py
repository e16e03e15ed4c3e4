"""State-vector toolkit for search dynamics and cloning analysis.

Four study areas share one numerical substrate:

- standard: fixed-axis amplitude amplification with its closed-form
  angle law and iteration bound
- modified: the reflect-about-current-state variant whose per-step angle
  tripling cuts the step count exponentially, at the price of a
  physically impossible copy of the running state
- reflection_machine: why that copy is impossible; scalar consistency
  constraints plus an optimization search over unitaries for the best
  approximate reflection machine
- cloning: linear-independence determinant of the search-state family,
  the best universal-copier fidelity, and a Monte-Carlo run showing what
  degraded copies do to the speedup
"""

from .cloning import (
    CloneQuality,
    StateFamilySpec,
    clone_quality,
    determinant_curve,
    family_determinant_closed,
    family_determinant_numeric,
    independence_boundary,
    run_degraded_modified,
)
from .config import (
    DEFAULT_DENSE_CAP,
    DEFAULT_MAX_QUBITS,
    DEFAULT_SEED,
)
from .errors import (
    CapacityError,
    ConfigError,
    DegeneratePlaneError,
    NormalizationError,
    ShapeMismatchError,
)
from .modified import best_step_modified, modified_step, r_mod, run_modified
from .reflection_machine import (
    OverlapConstraint,
    ReflectionMachineProblem,
    ReflectionMachineResult,
    consistency_scan,
    implied_control_overlaps,
    optimize_reflection_machine,
    reflection_residual,
    scan_zero_set,
)
from .standard import (
    best_step,
    first_peak_step,
    grover_step,
    iteration_bound,
    predicted_angle,
    run_standard,
    theta,
)
from .states import (
    PlaneCoordinates,
    SearchProblem,
    StateVector,
    apply_oracle,
    decompose_in_plane,
    inner_product,
    nonsolution_axis,
    reflect_about,
    solution_axis,
    success_probability,
    uniform_superposition,
)
from .trace import (
    RunTrace,
    TraceEntry,
    load_trace_csv,
    load_trace_json,
    write_trace,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "CloneQuality",
    "ConfigError",
    "DEFAULT_DENSE_CAP",
    "DEFAULT_MAX_QUBITS",
    "DEFAULT_SEED",
    "DegeneratePlaneError",
    "NormalizationError",
    "OverlapConstraint",
    "PlaneCoordinates",
    "ReflectionMachineProblem",
    "ReflectionMachineResult",
    "RunTrace",
    "SearchProblem",
    "ShapeMismatchError",
    "StateFamilySpec",
    "StateVector",
    "TraceEntry",
    "apply_oracle",
    "best_step",
    "best_step_modified",
    "clone_quality",
    "consistency_scan",
    "decompose_in_plane",
    "determinant_curve",
    "family_determinant_closed",
    "family_determinant_numeric",
    "first_peak_step",
    "grover_step",
    "implied_control_overlaps",
    "independence_boundary",
    "inner_product",
    "iteration_bound",
    "load_trace_csv",
    "load_trace_json",
    "modified_step",
    "nonsolution_axis",
    "optimize_reflection_machine",
    "predicted_angle",
    "r_mod",
    "reflect_about",
    "reflection_residual",
    "run_degraded_modified",
    "run_modified",
    "run_standard",
    "scan_zero_set",
    "solution_axis",
    "success_probability",
    "theta",
    "uniform_superposition",
    "write_trace",
]
