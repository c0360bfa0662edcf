"""Accumulated influence end to end on one cognitive map.
====================================================

Loads the bundled urban-sanitation map (7 concepts, signed weights),
computes the accumulated influence matrix, and ranks the concepts by
total outgoing influence.
"""

import numpy as np

from cogmap import general_influence, influence_matrix, load_fixture, max_abs_weight

cmap = load_fixture("sanitation")
print(f"map: {cmap.n} vertices, {np.count_nonzero(cmap.weights)} edges")
for i, label in enumerate(cmap.labels, start=1):
    print(f"  {i} = {label}")

# The largest absolute weight normalizes every accumulation step, which is
# what makes the whole computation scale-free.
print(f"\nnormalizing weight: {max_abs_weight(cmap)}")

Z = influence_matrix(cmap)
print("\naccumulated influence matrix (rows influence columns):")
with np.printoptions(precision=3, suppress=True):
    print(Z)

# A vertex's score is how strongly it pushes on everything else, in either
# direction: the row sum of absolute influences.
report = general_influence(Z)
print("\nranking by total outgoing influence:")
for rank, vertex in enumerate(report.ranking, start=1):
    label = cmap.labels[vertex - 1]
    print(f"  {rank}. {label:<20} {report.scores[vertex - 1]:.3f}")

# Sanity check worth knowing: influence along a lone edge is exactly its
# weight, and an unreachable target gets exactly zero.
print("\nmigration -> population edge weight:", cmap.weights[1, 0])
print("z[migration, population]          :", round(Z[1, 0], 6))
