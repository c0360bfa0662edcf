"""Simple-path enumeration and its combinatorial guardrails.
========================================================

All influence flows over simple directed paths, so enumerating them is the
workhorse.  This walks the small bundled maps, then shows how fast path
counts blow up on complete graphs and how the budgeted enumerator refuses
to truncate silently.
"""

import math

from cogmap import (
    PathBudgetError,
    complete_map,
    count_paths_complete,
    enumerate_simple_paths,
    enumerate_with_budget,
    load_fixture,
)

cmap = load_fixture("four_unstable")
print("paths 1 -> 4 in the four-vertex cycle map:")
for path in enumerate_simple_paths(cmap, 0, 3):
    route = " -> ".join(str(v + 1) for v in path)
    print(f"  {route}")

# The walk 1 -> 3 -> 4 -> 1 -> 2 would revisit vertex 1, so only the direct
# edge survives; simple paths never repeat a vertex.
print("\npaths 1 -> 2:", [p for p in enumerate_simple_paths(cmap, 0, 1)])

# Between two fixed vertices of the complete digraph K_n the count grows
# factorially; it stays below e * (n-2)!.
print("\nsimple-path counts between two vertices of K_n:")
for n in range(2, 9):
    count = count_paths_complete(n)
    bound = math.e * math.factorial(n - 2)
    print(f"  n = {n}: {count:>5}   (bound {bound:8.1f})")

# The budgeted enumerator aborts with a typed error instead of quietly
# returning a partial answer.
try:
    enumerate_with_budget(complete_map(8), 0, 1, max_paths=100)
except PathBudgetError as exc:
    print(f"\nbudget of 100 exceeded as expected: {exc}")

# A length bound is different: it redefines the search space (paths of at
# most that many edges), which is a complete answer, not a truncation.
short = enumerate_with_budget(complete_map(8), 0, 1, max_len=1)
print(f"K_8 with max_len=1 : {short.count} path (just the direct edge)")
