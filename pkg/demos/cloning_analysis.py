"""
Cloning the search state: feasible in principle, useless in practice
================================================================

Plan B for the modified search: clone the current state instead of
reflecting about it. Probabilistic exact cloning needs the reachable
states to be linearly independent, which the determinant of their
coefficient matrix decides. The determinant is nonzero almost everywhere
(good), but the only machine that clones every state of an unknown
family is the universal copier, whose fidelity decays to a coin flip as
N grows (bad). Feeding such copies to the search destroys the speedup.
"""

import math
import warnings

from scipy.linalg import LinAlgWarning

from groverlab import (
    SearchProblem,
    StateFamilySpec,
    clone_quality,
    family_determinant_closed,
    family_determinant_numeric,
    independence_boundary,
    run_degraded_modified,
    run_modified,
    theta,
)

# --- linear independence of the single-solution family --------------------
N = 32
boundary = independence_boundary(N)
print(f"family of {N} single-solution states, angle phi from 0 to pi/2")
print(f"determinant vanishes only at phi = arcsin(1/sqrt(N)) = "
      f"{boundary:.6f}")
print(f"the search starts exactly there: theta/2 = "
      f"{theta(SearchProblem(5, [0])) / 2.0:.6f}")
print()

print(f"{'phi':>8}  {'det (closed)':>14}  {'det (LU)':>14}")
# the factorization warns at the boundary row, where the matrix really
# is singular; that is the point being made
warnings.filterwarnings("ignore", category=LinAlgWarning)
for phi in (0.05, boundary, 0.3, 1.0, math.pi / 2):
    spec = StateFamilySpec(N=N, phi=phi)
    closed = family_determinant_closed(spec)
    numeric = family_determinant_numeric(spec)
    print(f"{phi:>8.4f}  {closed:>14.6e}  {numeric:>14.6e}")
print()

# one step into the search the states are independent again, so
# probabilistic exact cloning is not ruled out by linear algebra
# ... but it only applies to a KNOWN, finite family

# --- the universal copier is nearly blind at large N -----------------------
print(f"{'N':>9}  {'scaling factor':>15}  {'fidelity':>10}  {'F - 1/2':>10}")
for dim in (2, 4, 32, 1024, 10**6):
    q = clone_quality(dim)
    print(f"{dim:>9}  {q.scaling_factor:>15.6f}  {q.fidelity:>10.6f}  "
          f"{q.fidelity - 0.5:>10.3e}")
print()

# --- what imperfect copies do to the modified search -----------------------
problem = SearchProblem(5, [7])
ideal = run_modified(problem)
q = clone_quality(problem.N)
degraded = run_degraded_modified(problem, trials=200, seed=1729)

print(f"n=5 search, axis copies at the universal fidelity "
      f"F({problem.N}) = {q.fidelity:.4f}, 200 trials")
print(f"{'l':>3}  {'ideal p':>10}  {'degraded mean p':>16}  {'spread':>8}")
for a, b in zip(ideal.entries, degraded.entries):
    print(f"{a.step:>3}  {a.success_prob:>10.6f}  "
          f"{b.success_prob:>16.6f}  {b.success_prob_std:>8.4f}")
print()
print("the tripling law needs the reflection axis to track the state;")
print("copies this poor lose it after the first step")
