"""Weakest-link influence vs accumulated influence.
===============================================

The classical fuzzy-map reading of influence: a path transmits its weakest
edge, a pair transmits its strongest path.  It is cheap and interpretable
but ignores everything except one edge per path; the accumulated method
uses every edge.  Both run here on the same map for contrast.
"""

from cogmap import (
    influence_matrix,
    load_fixture,
    total_influence,
)

cmap = load_fixture("four_stable")
print("edges: 1->2 (0.391), 1->3 (-0.121), 2->4 (1), 3->4 (-1), 4->1 (1)\n")

result = total_influence(cmap, 0, 3)
print("weakest links on each path 1 -> 4:")
for path, weakest in result.per_path.items():
    route = " -> ".join(str(v + 1) for v in path)
    print(f"  {route}: {weakest}")
print(f"strongest path wins: total = {result.total}")

# The same pair under accumulation: both paths contribute, signs and
# magnitudes interact, and the answer is not just one edge.
Z = influence_matrix(cmap)
print(f"\naccumulated z[1,4] = {Z[0, 3]:.3f} (both routes summed)")

# For signed maps the raw minimum can be dominated by a large negative
# weight; magnitude mode ranks links by strength instead.
raw = total_influence(cmap, 0, 3)
mag = total_influence(cmap, 0, 3, abs_weights=True)
print(f"\nraw weakest links:       {dict(raw.per_path)}")
print(f"magnitude weakest links: {dict(mag.per_path)}")

# No path, no influence: the heavyweight map's vertex 1 has no outgoing
# edges, so nothing is transmitted from it.
heavy = load_fixture("four_heavy")
print("\nunreachable pair:", total_influence(heavy, 0, 1).total)
