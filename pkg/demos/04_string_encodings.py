"""Compress 2xn and 3xn MIS's into strings and count the string classes.

Every MIS of a two-row family is determined, up to the row flip, by which
columns it occupies, so the occupancy bit string is an exactly 2-to-1
fingerprint.  On the three-row thin cylinder the occupied row walks around
the triangle, and the +/- step string is a 3-to-1 fingerprint instead.
"""

from gridmis import (GridFamily, build, count_strings, enumerate_mis,
                     generate_strings, psi, psi_c, psi_preimage, tube_psi,
                     format_mis_line, fib, vertically_symmetric_strings)

g = build(GridFamily.GRID, 2, 5)
print("Occupancy strings of the grid 2x5 (each appears exactly twice):")
fibers = {}
for mask in enumerate_mis(g):
    fibers.setdefault(psi(g, mask), []).append(mask)
for s in sorted(fibers):
    print(f"  {s}: {len(fibers[s])} preimages")
print(f"distinct strings: {len(fibers)} = F(5) = {fib(5)}")

print()
a, b = psi_preimage("101")
g3 = build(GridFamily.GRID, 2, 3)
print("Rebuilding the two MIS's behind the string 101:",
      format_mis_line(g3, a), "and", format_mis_line(g3, b))

print()
print("String-class sizes (generated directly, closed forms in formulas):")
for kind, label in [("X", "grid images"), ("Y", "fat-cylinder images"),
                    ("Z", "mobius images"), ("E", "even 1's"),
                    ("O", "odd 1's"), ("B", "no adjacent 0's")]:
    counts = [count_strings(kind, n) for n in range(1, 10)]
    print(f"  {kind} ({label:19s}): {counts}")
print("palindromic grid images:",
      [len(vertically_symmetric_strings(n)) for n in range(2, 10)])

print()
g = build(GridFamily.FAT_CYLINDER, 2, 5)
print("Fat-cylinder 2x5 cyclic strings:",
      sorted({psi_c(g, m) for m in enumerate_mis(g)}))
print("  (all five rotations of 01111; an even number of 1's is forced)")

print()
g = build(GridFamily.THIN_CYLINDER, 3, 4)
signs = {}
for mask in enumerate_mis(g):
    signs.setdefault(tube_psi(g, mask), []).append(mask)
print(f"Thin cylinder 3x4: {sum(map(len, signs.values()))} MIS's map onto "
      f"{len(signs)} sign strings, {len(next(iter(signs.values())))} each:")
print(" ", " ".join(sorted(signs)))
