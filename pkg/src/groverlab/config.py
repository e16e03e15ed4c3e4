"""Resource caps, numeric tolerances, and reproducibility defaults.

These are module-level constants rather than runtime configuration: every
function that consults a cap also accepts it as a keyword argument, so the
values here are just the defaults for a desk-scale machine.
"""

# Largest register simulated by default. 2**24 complex128 amplitudes is
# 256 MiB, which keeps a full run plus one scratch copy under a gigabyte.
DEFAULT_MAX_QUBITS = 24

# Largest dense matrix order for determinant work (4096 x 4096 float64
# is 128 MiB; LU needs one extra copy).
DEFAULT_DENSE_CAP = 4096

# Seed used whenever the caller does not supply one, so that every
# stochastic entry point is reproducible out of the box.
DEFAULT_SEED = 1729

# Unit-norm invariant enforced on construction and preserved by operators.
NORM_TOL = 1e-10

# Looser gate for user-supplied reflection axes and unitarity checks.
AXIS_NORM_TOL = 1e-8
