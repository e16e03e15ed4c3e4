"""
Fixed-axis search on ten qubits
===============================

One marked item out of 1024. Every step rotates the state by a constant
angle theta inside the plane spanned by the solution and non-solution
axes, so success probability follows sin^2((2k+1) theta/2) exactly.
"""

import math

from groverlab import (
    SearchProblem,
    iteration_bound,
    run_standard,
    theta,
)

problem = SearchProblem(10, [451])
th = theta(problem)
bound = iteration_bound(problem)

print(f"N = {problem.N}, M = {problem.M}")
print(f"per-step angle theta = {th:.9f} rad")
print(f"iteration bound ceil((pi/4) sqrt(N/M)) = {bound}")
print()

# run a few steps past the bound to watch the rotation overshoot pi/2
trace = run_standard(problem, max_steps=bound + 4)

print(f"{'k':>3}  {'predicted':>11}  {'measured':>11}  {'p(success)':>12}")
for entry in trace.entries:
    if entry.step <= 3 or entry.step >= bound - 2:
        print(
            f"{entry.step:>3}  {entry.predicted_angle:>11.6f}  "
            f"{entry.measured_angle:>11.6f}  {entry.success_prob:>12.9f}"
        )
    elif entry.step == 4:
        print(f"{'...':>3}")

best = trace.best_entry()
print()
print(f"peak at k = {best.step}: p = {best.success_prob:.9f}")
print(f"angle there: {best.measured_angle:.6f} rad vs pi/2 = {math.pi/2:.6f}")

# the closed form tracks the simulation to machine precision
worst = max(
    abs(e.success_prob - math.sin((2 * e.step + 1) * th / 2.0) ** 2)
    for e in trace.entries
)
print(f"max |simulated - closed form| over the whole trace: {worst:.3e}")
