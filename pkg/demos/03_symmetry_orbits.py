"""Group MIS's into orbits under the graph's automorphisms.

The automorphism group comes from a pruned backtracking search;
where a geometric generator list is known, its closure is checked against
the search.  Orbits, stabilizers and the Burnside average all get
cross-verified, and the orbit counts land exactly on the closed forms.
"""

from gridmis import (GridFamily, build, enumerate_mis, full_group,
                     nimis_count, nimis_2xn, nimis_tube_3xn, orbit_partition,
                     orbit_report, band_nimis_via_compositions)

for family, m, n in [(GridFamily.GRID, 4, 6), (GridFamily.GRID, 3, 3),
                     (GridFamily.THIN_CYLINDER, 3, 5),
                     (GridFamily.FAT_CYLINDER, 2, 6),
                     (GridFamily.MOBIUS, 2, 5),
                     (GridFamily.MOBIUS, 2, 3)]:
    g = build(family, m, n)
    grp = full_group(g)
    print(f"Aut({family.value} {m}x{n}) has order {grp.order}")
print("(the Mobius 2x3 is K_{3,3}, hence the big group)")

print()
g = build(GridFamily.GRID, 2, 6)
mis_list = list(enumerate_mis(g))
part = orbit_partition(g, mis_list, full_group(g))
print(f"Grid 2x6: {len(mis_list)} MIS's fall into {part.num_orbits} orbits "
      f"(closed form gives {nimis_2xn(6)}):")
print(orbit_report(g, mis_list, part))

print("Thin cylinder 3xn orbit counts vs 2^(n-3) + 2^ceil((n-4)/2):")
for n in range(2, 9):
    got = nimis_count(build(GridFamily.THIN_CYLINDER, 3, n))
    print(f"  n={n}: orbits = {got:3d}, formula = {nimis_tube_3xn(n)}")

print()
print("Fat cylinder 2xn orbit counts vs the composition-class sum:")
for n in range(3, 11):
    got = nimis_count(build(GridFamily.FAT_CYLINDER, 2, n))
    print(f"  n={n}: orbits = {got:2d}, compositions give "
          f"{band_nimis_via_compositions(n)}")
