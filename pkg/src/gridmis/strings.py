"""String encodings of MIS's in 2xn and 3xn grid-like graphs.

An MIS of a 2xn family maps to the binary string of per-column occupancy
counts (each column holds 0 or 1 members).  The image sets are:

* X_n -- grid 2xn images: first and last bit 1, no two adjacent 0's
* Y_n -- fat-cylinder 2xn images: cyclic, no adjacent 0's, evenly many 1's
* Z_n -- Mobius 2xn images: cyclic, no adjacent 0's, oddly many 1's

(in a cyclic string the first and last bits count as adjacent).  Each valid
string has exactly two preimages, exchanged by the row flip.  E_n / O_n /
B_n are the unrestricted-boundary string classes (no adjacent 0's, with an
even / odd / any number of 1's); all classes are generated directly here so
the closed forms in ``formulas`` can be cross-checked string by string.

An MIS of the thin cylinder 3xn meets every column in exactly one vertex;
reading off whether the occupied row steps by +1 or -1 (mod 3) between
consecutive columns gives a sign string in {+,-}^(n-1).

Compositions of n into k positive parts are counted up to the dihedral
group D_k by canonical-form deduplication: the class representative is the
lexicographically minimal tuple over all rotations and reflections.
"""

from functools import lru_cache

from .grids import GridFamily, build
from .counting import verify_mis, VALID_MIS

_GENERATION_LIMIT = 20  # direct generation is the oracle up to this length


# ---------------------------------------------------------------------------
# Binary string classes
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def no_adjacent_zero_strings(n):
    """All length-n binary strings with no '00' substring (the class B_n)."""
    if n < 0:
        return ()
    if n == 0:
        return ("",)
    if n == 1:
        return ("0", "1")
    out = []
    for s in no_adjacent_zero_strings(n - 1):
        out.append(s + "1")
        if s[-1] == "1":
            out.append(s + "0")
    return tuple(sorted(out))


def is_cyclic_valid(s):
    """No two cyclically adjacent 0's (first and last bits are adjacent)."""
    if "00" in s:
        return False
    return not (s and s[0] == "0" and s[-1] == "0")


def _ones(s):
    return s.count("1")


def generate_strings(kind, n):
    """Directly generate the string class ``kind`` in {X,Y,Z,E,O,B} at length n."""
    if n < 0:
        return []
    base = no_adjacent_zero_strings(n)
    if kind == "B":
        return list(base)
    if kind == "X":
        return [s for s in base if s and s[0] == "1" and s[-1] == "1"]
    if kind == "E":
        return [s for s in base if _ones(s) % 2 == 0]
    if kind == "O":
        return [s for s in base if _ones(s) % 2 == 1]
    if kind == "Y":
        return [s for s in base if is_cyclic_valid(s) and _ones(s) % 2 == 0]
    if kind == "Z":
        return [s for s in base if is_cyclic_valid(s) and _ones(s) % 2 == 1]
    raise ValueError(f"unknown string kind {kind!r}")


def count_strings(kind, n):
    """|kind_n| exactly.

    Up to length 20 the count comes from direct generation (the oracle);
    beyond that the closed forms take over.  The Y/Z closed forms need
    n >= 5, which is automatic there.
    """
    from . import formulas

    if n < 0:
        return 0
    if n <= _GENERATION_LIMIT:
        return len(generate_strings(kind, n))
    if kind == "B":
        return formulas.fib(n + 2)
    if kind == "X":
        return formulas.fib(n)
    if kind == "E":
        return formulas.even_ones_count(n)
    if kind == "O":
        return formulas.odd_ones_count(n)
    if kind == "Y":
        return formulas.even_ones_count(n) - formulas.even_ones_count(n - 4)
    if kind == "Z":
        return formulas.odd_ones_count(n) - formulas.odd_ones_count(n - 4)
    raise ValueError(f"unknown string kind {kind!r}")


def vertically_symmetric_strings(n):
    """Palindromic members of X_n; these mark grid-2xn MIS's with small orbits."""
    return [s for s in generate_strings("X", n) if s == s[::-1]]


def dump_strings(kind, n):
    """One string per line, lexicographic."""
    return "\n".join(sorted(generate_strings(kind, n))) + "\n"


# ---------------------------------------------------------------------------
# Occupancy maps for 2xn families
# ---------------------------------------------------------------------------

def psi(g, mask):
    """Occupancy string of an MIS of the 2xn grid: bit i = |M  in column i|."""
    _require_two_rows(g, (GridFamily.GRID,))
    return _occupancy(g, mask)


def psi_c(g, mask):
    """Occupancy string of an MIS of the 2xn fat cylinder or Mobius strip."""
    _require_two_rows(g, (GridFamily.FAT_CYLINDER, GridFamily.MOBIUS))
    return _occupancy(g, mask)


def _require_two_rows(g, families):
    if g.family not in families:
        names = ", ".join(f.value for f in families)
        raise ValueError(f"expected family in {{{names}}}, got {g.family.value}")
    if g.m != 2:
        raise ValueError(f"expected m = 2, got m = {g.m}")


def _occupancy(g, mask):
    bits = []
    for i in range(1, g.n + 1):
        c = (mask & g.column_mask(i)).bit_count()
        if c > 1:
            raise ValueError(f"column {i} holds {c} members; not an independent set")
        bits.append("01"[c])
    return "".join(bits)


def psi_preimage(bits, g=None):
    """The two grid-2xn MIS's whose occupancy string is ``bits``.

    The occupied columns alternate rows; the second preimage is the row
    flip of the first.  Both are verified to be valid MIS's before return.
    Raises ValueError if the string is not valid for X_n.
    """
    n = len(bits)
    if n == 0 or bits[0] != "1" or bits[-1] != "1" or "00" in bits:
        raise ValueError(f"{bits!r} is not a valid grid-2xn occupancy string")
    if any(ch not in "01" for ch in bits):
        raise ValueError(f"{bits!r} is not a binary string")
    if g is None:
        g = build(GridFamily.GRID, 2, n)
    elif g.family is not GridFamily.GRID or g.m != 2 or g.n != n:
        raise ValueError("preimage host must be the grid 2xn matching the string")
    cols = [i + 1 for i, ch in enumerate(bits) if ch == "1"]
    a = 0
    b = 0
    for pos, i in enumerate(cols):
        row_a = 1 if pos % 2 == 0 else 2
        a |= 1 << g.vertex_index((i, row_a))
        b |= 1 << g.vertex_index((i, 3 - row_a))
    for mask in (a, b):
        status, witness = verify_mis(g, mask)
        assert status == VALID_MIS, f"preimage of {bits!r} failed: {status} {witness}"
    return a, b


# ---------------------------------------------------------------------------
# Sign strings for the thin cylinder 3xn
# ---------------------------------------------------------------------------

def tube_occupied_rows(g, mask):
    """Row index of the unique member in each column of a thin-3xn MIS."""
    if g.family is not GridFamily.THIN_CYLINDER or g.m != 3:
        raise ValueError(f"expected thin cylinder with m = 3, got "
                         f"{g.family.value} with m = {g.m}")
    rows = []
    for i in range(1, g.n + 1):
        members = mask & g.column_mask(i)
        if members.bit_count() != 1:
            raise ValueError(f"column {i} holds {members.bit_count()} members; "
                             "a thin-3xn MIS meets every column exactly once")
        k = (members & -members).bit_length() - 1
        rows.append(g.vertex_at(k)[1])
    return rows


def tube_psi(g, mask):
    """Sign string of a thin-3xn MIS: '+' where the occupied row steps by +1
    (mod 3) into the next column, '-' where it steps by -1."""
    rows = tube_occupied_rows(g, mask)
    signs = []
    for a, b in zip(rows, rows[1:]):
        if (b - a) % 3 == 1:
            signs.append("+")
        elif (b - a) % 3 == 2:
            signs.append("-")
        else:
            raise ValueError("occupied rows repeat between adjacent columns")
    return "".join(signs)


def negate_signs(s):
    return s.translate(str.maketrans("+-", "-+"))


# ---------------------------------------------------------------------------
# Compositions under the dihedral group
# ---------------------------------------------------------------------------

def compositions(k, n):
    """All ordered k-tuples of positive integers summing to n."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    out = []

    def grow(parts, remaining, slots):
        if slots == 1:
            if remaining >= 1:
                out.append(tuple(parts) + (remaining,))
            return
        for p in range(1, remaining - slots + 2):
            grow(parts + [p], remaining - p, slots - 1)

    if n >= k:
        grow([], n, k)
    return out


def dihedral_canonical(parts):
    """Lexicographically minimal image of a tuple under rotation/reflection."""
    k = len(parts)
    best = None
    for seq in (parts, parts[::-1]):
        doubled = seq + seq
        for r in range(k):
            cand = doubled[r:r + k]
            if best is None or cand < best:
                best = cand
    return best


def composition_orbits(k, n):
    """|C_k(n)/D_k|: k-compositions of n up to rotation and reflection.

    Returns 0 when n < k (no compositions exist).
    """
    if n < k:
        return 0
    return len({dihedral_canonical(c) for c in compositions(k, n)})


def dump_composition_classes(k, n):
    """Canonical representative per class, comma-separated parts, one per line."""
    reps = sorted({dihedral_canonical(c) for c in compositions(k, n)})
    return "\n".join(",".join(map(str, rep)) for rep in reps) + "\n"


def band_nimis_via_compositions(n):
    """Number of MIS orbits of the fat cylinder 2xn, by composition classes.

    1 + sum over k of |C_{2k}(n-2k)/D_{2k}| (even n, k up to floor(n/4)) or
    of |C_{2k+1}(n-2k-1)/D_{2k+1}| (odd n, k up to floor((n-2)/4)); empty
    sums contribute 0.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    total = 1
    if n % 2 == 0:
        for k in range(1, n // 4 + 1):
            total += composition_orbits(2 * k, n - 2 * k)
    else:
        for k in range(1, (n - 2) // 4 + 1):
            total += composition_orbits(2 * k + 1, n - 2 * k - 1)
    return total
