"""Impulse simulation, spectral stability, and where the method breaks.
===================================================================

The impulse baseline propagates a unit shock along edge direction and sums
the changes.  That only means anything when the process is stable, which is
a property of the weight matrix's eigenvalues: all nonzero ones pairwise
distinct and inside the unit circle.  This script shows a clean convergent
run, the spectral verdicts for every bundled map, and an unstable map where
the accumulated method still answers.
"""

import numpy as np

from cogmap import (
    FIXTURE_NAMES,
    general_influence,
    impulse_general_influence,
    influence_matrix,
    load_fixture,
    simulate,
    stability_check,
)

# A stable four-vertex map: the shock dies out geometrically.
stable = load_fixture("four_stable")
trace = simulate(stable, p0=[1, 0, 0, 0], eps=1e-6)
print(f"stable map: converged after {trace.steps_to_converge} steps")
print("final vertex values:", np.round(trace.final_values, 3))

# Verdicts across every bundled map.
print("\nstability verdicts:")
for name in FIXTURE_NAMES:
    verdict = stability_check(load_fixture(name))
    mags = ", ".join(f"{m:.3f}" for m in verdict.magnitudes)
    flag = "stable" if verdict.stable else "UNSTABLE"
    print(f"  {name:<20} {flag:<9} |eigenvalues| = {mags}")

# On an unstable map the impulse grows without bound...
unstable = load_fixture("four_unstable")
trace = simulate(unstable, p0=[1, 0, 0, 0], max_steps=200)
peak = np.max(np.abs(trace.impulses[-1]))
print(f"\nunstable map after 200 steps: max |impulse| = {peak:.3e}, no convergence")

# ...so impulse scoring refuses, while the accumulated method still works.
try:
    impulse_general_influence(unstable)
except Exception as exc:
    print(f"impulse scoring refused: {exc}")
report = general_influence(influence_matrix(unstable))
print("accumulated ranking on the same map:", list(report.ranking))

# Where both methods apply, they can agree exactly: rank the stable map
# both ways.
acc = general_influence(influence_matrix(stable))
imp = impulse_general_influence(stable)
print("\nstable map, accumulated ranking:", list(acc.ranking))
print("stable map, impulse ranking:    ", list(imp.ranking))
