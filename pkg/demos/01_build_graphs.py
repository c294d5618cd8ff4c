"""Build the grid-like graph families and look at their structure.

All five families live on the same vertex set {(column, row)}; they differ
only in which wrap edges get added.  Wrap edges that coincide with grid
edges deduplicate, so e.g. the thin cylinder with two rows *is* the grid.
"""

from gridmis import GridFamily, build, degree_sequence, export_adjacency, slice_vertices

for family in GridFamily:
    g = build(family, 3, 4)
    degrees = degree_sequence(g)
    print(f"{family.value:14s} 3x4: {g.num_vertices} vertices, "
          f"{len(g.edges)} edges, degrees {min(degrees)}..{max(degrees)}")

print()
print("The Mobius strip 2x3 and its twisted wrap edges:")
print(export_adjacency(build(GridFamily.MOBIUS, 2, 3)))

print("Slice 2 of the grid 2x3:", sorted(slice_vertices(build(GridFamily.GRID, 2, 3), 2)))

thin = build(GridFamily.THIN_CYLINDER, 2, 5)
grid = build(GridFamily.GRID, 2, 5)
print("thin-cylinder 2x5 edge set == grid 2x5 edge set:", thin.edges == grid.edges)

fat = build(GridFamily.FAT_CYLINDER, 3, 5)
thin = build(GridFamily.THIN_CYLINDER, 5, 3)
print("fat 3x5 vs thin 5x3 (isomorphic): degree sequences match:",
      degree_sequence(fat) == degree_sequence(thin))
