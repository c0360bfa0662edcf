"""Scale behavior: rescaling weights rescales scores, nothing else.
===============================================================

Multiplying every weight by a constant should not change which concepts
dominate a map; it only changes units.  The accumulated method guarantees
exactly that (the normalization makes the recurrence scale-free), while the
impulse method's stability can silently break when weights grow.
"""

import numpy as np

from cogmap import (
    general_influence,
    influence_matrix,
    load_fixture,
    scale_map,
    stability_check,
)

cmap = load_fixture("sanitation")
base = general_influence(influence_matrix(cmap))
print("base scores:", np.round(base.scores, 4))
print("base ranking:", list(base.ranking))

print("\nscores after scaling all weights by eta:")
print(f"{'eta':>8}  {'max |score/eta - base|':>24}  ranking")
for eta in (0.01, 0.1, 2, 10, 100):
    scaled = general_influence(influence_matrix(scale_map(cmap, eta)))
    drift = max(
        abs(s / eta - b) for s, b in zip(scaled.scores, base.scores)
    )
    same = "identical" if scaled.ranking == base.ranking else "DIFFERENT"
    print(f"{eta:>8g}  {drift:>24.3e}  {same}")

# The impulse method has no such guarantee: doubling the sanitation map's
# weights pushes eigenvalues outside the unit circle and the method stops
# being applicable at all.
print("\nimpulse-method stability under scaling:")
for eta in (1, 2):
    verdict = stability_check(scale_map(cmap, eta))
    print(
        f"  eta = {eta}: spectral radius {verdict.spectral_radius:.3f} "
        f"-> {'stable' if verdict.stable else 'unstable'}"
    )
