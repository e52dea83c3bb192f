"""Alternating-walk reachability on two contrasting 8-vertex graphs.

An mm-alternating walk starts and ends with matching edges and may revisit
vertices.  The set of endpoints reachable from a vertex v turns out not to
depend on which perfect matching you alternate against - this script shows
that on a bipartite ladder (where no vertex can ever walk back to itself)
and on a tangled graph with odd cycles (where every vertex can).
"""

from sdke import build_graph, matching_from_edges, reachable_set, has_mm_closed_walk

# A 2x4 grid: vertices 0..3 on the bottom, 4..7 on top.
ladder = build_graph(8, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7),
                         (0, 4), (1, 5), (2, 6), (3, 7)])

# Two of its five perfect matchings: all rungs, or two rungs plus two rails.
rungs = matching_from_edges(8, [(0, 4), (1, 5), (2, 6), (3, 7)])
mixed = matching_from_edges(8, [(0, 4), (1, 5), (2, 3), (6, 7)])

print("ladder, reachable sets from vertex 0:")
for name, m in (("all-rungs matching ", rungs), ("mixed matching     ", mixed)):
    print(f"  {name}: {sorted(reachable_set(ladder, m, 0))}")
print("the sets agree, and 0 is not in them: no closed walk, the graph is bipartite")
print()

# Add odd cycles and the picture flips: here every vertex reaches everything.
tangle = build_graph(8, [(0, 1), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4),
                         (3, 6), (3, 7), (4, 5), (4, 6), (4, 7), (6, 7)])
m = matching_from_edges(8, [(0, 1), (3, 4), (2, 5), (6, 7)])

print("tangle, reachable set from vertex 0:", sorted(reachable_set(tangle, m, 0)))
print("closed mm walks exist everywhere:",
      all(has_mm_closed_walk(tangle, m, v) for v in range(8)))
