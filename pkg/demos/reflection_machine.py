"""
Can a fixed unitary reflect about an unknown state?
===================================================

The modified search needs the operation 2|chi><chi| - I with |chi> the
current, unknown, state. Suppose a two-register machine U did this for a
whole family of controls. Demanding it for two controls with overlap c
implies an auxiliary overlap t two different ways; the implied values
t1 = c/(2|c|^2 - 1) and t2 = c/(4|c|^2 - 3) agree only at |c| in {0, 1}.
Identical controls, or perfectly distinguishable ones: exactly the cases
that never needed an unknown-state reflection in the first place.
"""

import math

from groverlab import (
    StateVector,
    consistency_scan,
    implied_control_overlaps,
    optimize_reflection_machine,
    reflection_residual,
    scan_zero_set,
)
from groverlab.reflection_machine import (
    basis_controlled_machine,
    benchmark_controls,
    benchmark_targets,
    single_control_machine,
)

# --- the scalar constraint ------------------------------------------------
print(f"{'|c|':>8}  {'t1':>10}  {'t2':>10}  {'|t1 - t2|':>10}")
for c in (0.0, 0.3, 0.9, math.sqrt(0.5), math.sqrt(0.75), 1.0):
    oc = implied_control_overlaps(c)
    t1 = "pole" if oc.t1 is None else f"{oc.t1.real:.4f}"
    t2 = "pole" if oc.t2 is None else f"{oc.t2.real:.4f}"
    disc = "-" if oc.discrepancy is None else f"{oc.discrepancy:.4f}"
    print(f"{c:>8.4f}  {t1:>10}  {t2:>10}  {disc:>10}")

points = consistency_scan(10_000)
zeros = scan_zero_set(points)
print(f"\ndiscrepancy zeros over a 10^4 grid: {zeros}")
print()

# --- both consistent cases really do admit exact machines -----------------
chi = StateVector.basis_state(2, 0)
targets = [(chi, phi) for phi in benchmark_targets(d=2)]
exact_single = single_control_machine(chi)
print(f"single-control machine residual:  "
      f"{reflection_residual(exact_single, targets):.2e}")

basis_targets = [
    (c, phi)
    for c in benchmark_controls("orthogonal", d=2)
    for phi in benchmark_targets(d=2)
]
exact_basis = basis_controlled_machine(2)
print(f"basis-controlled machine residual: "
      f"{reflection_residual(exact_basis, basis_targets):.2e}")
print()

# --- and the inconsistent case does not ------------------------------------
# optimize over the full unitary group on C^2 (x) C^2; the solvable
# families hit machine precision, the 0.9-overlap family hits a wall
for case in ("single", "orthogonal", "overlap"):
    result = optimize_reflection_machine(
        2,
        benchmark_controls(case, d=2, overlap=0.9),
        benchmark_targets(d=2),
        starts=10,
        target_residual=1e-10,
    )
    print(
        f"{case:>10}: best residual {result.best_residual:.3e} "
        f"after {result.starts} restart(s)"
    )
print()
print("the 0.9-overlap floor is structural: restarts from anywhere in")
print("U(4) land on the same value, and it never reaches zero")
