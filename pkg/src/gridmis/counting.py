"""Enumerating and counting maximal independent sets (MIS's) of grid-like graphs.

Two genuinely independent engines are provided:

* ``enumerate_mis`` -- exhaustive column-by-column backtracking over vertex
  bitmasks.  This is the oracle: it emits every MIS exactly once, in a
  canonical order, and is used to validate everything else.
* ``count_mis_dp`` / ``size_polynomial_dp`` -- a slice-transfer dynamic
  program over row-mask states.  For column-cyclic families (fat cylinder,
  Mobius) the seam is closed by conditioning on the first column's choice;
  the Mobius seam composes the row reversal j -> m+1-j (implicitly, via the
  actual wrap edges).

The engines share no transition code, so their agreement on an instance is
meaningful evidence.

An MIS is represented as an integer bitmask over the host graph's
column-major vertex indices.  The canonical stream order is lexicographic
on the membership bit string read in column-major order ('0' < '1').

A set is maximal independent iff it is independent and covers every vertex
(every vertex is in the set or adjacent to a member); both engines and the
verifier use that characterisation.
"""

from fractions import Fraction

from .grids import BudgetExceededError, FamilyUnsupportedError, GridFamily

DEFAULT_ENUMERATION_BUDGET = 36  # max vertex count for exhaustive enumeration
DEFAULT_DP_WIDTH_BUDGET = 12     # max row count m for the slice DP

VALID_MIS = "valid-MIS"
NOT_INDEPENDENT = "not-independent"
NOT_MAXIMAL = "not-maximal"


def enumerate_mis(g, budget=DEFAULT_ENUMERATION_BUDGET):
    """Every MIS of g exactly once, as an iterator in canonical order.

    The family must not be the torus, and the vertex count must fit the
    enumeration budget; both are checked at call time.
    """
    if g.family is GridFamily.TORUS:
        raise FamilyUnsupportedError("enumerate_mis does not accept the torus")
    if g.num_vertices > budget:
        raise BudgetExceededError(
            f"{g.num_vertices} vertices exceed the enumeration budget {budget}",
            budget)
    return iter(_enumerate_masks(g))


def count_mis_for_parity(g, budget=DEFAULT_ENUMERATION_BUDGET):
    """Exact |MIS(g)| by exhaustive search, for parity checks.

    This is the one counting entry point that accepts every family,
    including the torus.
    """
    if g.num_vertices > budget:
        raise BudgetExceededError(
            f"{g.num_vertices} vertices exceed the enumeration budget {budget}",
            budget)
    return len(_enumerate_masks(g))


def _enumerate_masks(g):
    """All MIS bitmasks of g, sorted in canonical order.

    Backtracks column by column.  Coverage of a column is checked as soon
    as no later column can still cover it (column c is finalised once the
    largest column holding a neighbour of c has been chosen), which prunes
    hard while staying correct for wrap edges between columns 1 and n.
    """
    m, n, nv = g.m, g.n, g.num_vertices
    nbr = g.neighbor_masks

    # Per column: candidate subsets (vertex bits, neighbour-union bits),
    # each independent within the column.
    candidates = []
    for c in range(1, n + 1):
        base = (c - 1) * m
        col_bits = [base + r for r in range(m)]
        cands = []

        def grow(r, bits, nbrs):
            if r == m:
                cands.append((bits, nbrs))
                return
            grow(r + 1, bits, nbrs)
            k = col_bits[r]
            if nbrs >> k & 1 == 0 and nbr[k] & bits == 0:
                grow(r + 1, bits | (1 << k), nbrs | nbr[k])

        grow(0, 0, 0)
        candidates.append(cands)

    # check_after[c] = columns fully determined once column c+1 is chosen
    # (0-based column indices here).
    finalize = []
    for c in range(n):
        last = c
        for r in range(m):
            mask = nbr[c * m + r]
            while mask:
                k = (mask & -mask).bit_length() - 1
                last = max(last, k // m)
                mask &= mask - 1
        finalize.append(last)
    check_after = [[] for _ in range(n)]
    for c in range(n):
        check_after[finalize[c]].append(g.column_mask(c + 1))

    out = []

    def rec(c, chosen, covered):
        if c == n:
            out.append(chosen)
            return
        for bits, nbrs in candidates[c]:
            if nbrs & chosen:
                continue
            cov = covered | bits | nbrs
            for col_mask in check_after[c]:
                if col_mask & ~cov:
                    break
            else:
                rec(c + 1, chosen | bits, cov)

    rec(0, 0, 0)
    out.sort(key=lambda p: _canonical_key(p, nv))
    return out


def _neighbor_union(g, mask):
    acc = 0
    while mask:
        k = (mask & -mask).bit_length() - 1
        acc |= g.neighbor_masks[k]
        mask &= mask - 1
    return acc


def _canonical_key(mask, nv):
    """Integer whose ordering equals bit-string lexicographic order."""
    rev = 0
    while mask:
        k = (mask & -mask).bit_length() - 1
        rev |= 1 << (nv - 1 - k)
        mask &= mask - 1
    return rev


def verify_mis(g, s):
    """Classify a vertex set: valid MIS, or failure with a concrete witness.

    ``s`` may be a bitmask or an iterable of vertices.  Returns a pair
    (status, witness) where status is one of VALID_MIS, NOT_INDEPENDENT
    (witness = offending edge) or NOT_MAXIMAL (witness = uncovered vertex).
    """
    mask = s if isinstance(s, int) else _to_mask(g, s)
    rest = mask
    while rest:
        k = (rest & -rest).bit_length() - 1
        hit = g.neighbor_masks[k] & mask
        if hit:
            other = (hit & -hit).bit_length() - 1
            u, v = g.vertex_at(k), g.vertex_at(other)
            return (NOT_INDEPENDENT, (u, v) if u <= v else (v, u))
        rest &= rest - 1
    covered = mask | _neighbor_union(g, mask)
    uncovered = ((1 << g.num_vertices) - 1) & ~covered
    if uncovered:
        k = (uncovered & -uncovered).bit_length() - 1
        return (NOT_MAXIMAL, g.vertex_at(k))
    return (VALID_MIS, None)


def _to_mask(g, vs):
    mask = 0
    for v in vs:
        mask |= 1 << g.vertex_index(v)
    return mask


def format_mis_line(g, mask):
    """Stream-export line for one MIS: ``size;(i1,j1),(i2,j2),...``."""
    vs = []
    rest = mask
    while rest:
        k = (rest & -rest).bit_length() - 1
        vs.append(g.vertex_at(k))
        rest &= rest - 1
    body = ",".join(f"({i},{j})" for i, j in vs)
    return f"{mask.bit_count()};{body}"


# ---------------------------------------------------------------------------
# Slice-transfer dynamic program.
#
# State after column c: (S, U) with S the chosen row mask of column c and U
# the rows of column c not yet covered.  A transition to column c+1 must
# cover all of U.  For cyclic families the outer loop fixes the first
# column's mask S1; rows of column 1 left uncovered after column 2 are
# carried through the pass as a pending set W and must be covered across
# the seam by the last column.
# ---------------------------------------------------------------------------


def _dp_structures(g):
    """Row-level adjacency tables extracted from the actual edge set."""
    m, n = g.m, g.n
    within = [[0] * m for _ in range(n)]    # within[c][r] = rows adjacent in column c+1
    to_next = [[0] * m for _ in range(n)]   # rows of column c+2 adjacent to (c+1, r)
    to_prev = [[0] * m for _ in range(n)]   # rows of column c adjacent to (c+1, r)
    seam_fwd = [0] * m                      # rows of column 1 adjacent to (n, r)
    seam_bwd = [0] * m                      # rows of column n adjacent to (1, r)
    for (i1, j1), (i2, j2) in g.edges:
        c1, r1, c2, r2 = i1 - 1, j1 - 1, i2 - 1, j2 - 1
        if c1 == c2:
            within[c1][r1] |= 1 << r2
            within[c1][r2] |= 1 << r1
        if c2 == c1 + 1:
            to_next[c1][r1] |= 1 << r2
            to_prev[c2][r2] |= 1 << r1
        if c1 == 0 and c2 == n - 1 and n >= 2:
            seam_fwd[r2] |= 1 << r1
            seam_bwd[r1] |= 1 << r2

    indep = []
    for c in range(n):
        col = []

        def grow(r, bits):
            if r == m:
                col.append(bits)
                return
            grow(r + 1, bits)
            if within[c][r] & bits == 0:
                grow(r + 1, bits | (1 << r))

        grow(0, 0)
        indep.append(sorted(col))
    return within, to_next, to_prev, seam_fwd, seam_bwd, indep


def _expand(table, rows):
    acc = 0
    while rows:
        r = (rows & -rows).bit_length() - 1
        acc |= table[r]
        rows &= rows - 1
    return acc


def size_polynomial_dp(g, width_budget=DEFAULT_DP_WIDTH_BUDGET):
    """Exact map {MIS size r: number of MIS's of size r} via the slice DP."""
    if g.family is GridFamily.TORUS:
        raise FamilyUnsupportedError("the slice DP does not accept the torus")
    if g.m > width_budget:
        raise BudgetExceededError(
            f"m = {g.m} exceeds the DP width budget {width_budget}", width_budget)
    within, to_next, to_prev, seam_fwd, seam_bwd, indep = _dp_structures(g)
    m, n = g.m, g.n
    rows = (1 << m) - 1
    cyclic = g.family in (GridFamily.FAT_CYLINDER, GridFamily.MOBIUS)

    def self_cover(c, S):
        return S | _expand(within[c], S)

    poly = {}
    if not cyclic:
        states = {}
        for S in indep[0]:
            u = rows & ~self_cover(0, S)
            _bump(states, (S, u), S.bit_count(), 1)
        for c in range(1, n):
            nxt = {}
            for (Sp, Up), sizes in states.items():
                reach = _expand(to_next[c - 1], Sp)
                for S in indep[c]:
                    if reach & S:
                        continue
                    if Up & ~_expand(to_prev[c], S):
                        continue
                    u = rows & ~(self_cover(c, S) | reach)
                    _merge(nxt, (S, u), sizes, S.bit_count())
            states = nxt
        for (S, u), sizes in states.items():
            if u == 0:
                _accumulate(poly, sizes)
    else:
        for S1 in indep[0]:
            u1 = rows & ~self_cover(0, S1)
            reach1 = _expand(to_next[0], S1)
            states = {}
            for S2 in indep[1]:
                if reach1 & S2:
                    continue
                pending = u1 & ~_expand(to_prev[1], S2)
                u2 = rows & ~(self_cover(1, S2) | reach1)
                _bump(states, (pending, S2, u2), S1.bit_count() + S2.bit_count(), 1)
            for c in range(2, n):
                nxt = {}
                for (W, Sp, Up), sizes in states.items():
                    reach = _expand(to_next[c - 1], Sp)
                    for S in indep[c]:
                        if reach & S:
                            continue
                        if Up & ~_expand(to_prev[c], S):
                            continue
                        u = rows & ~(self_cover(c, S) | reach)
                        _merge(nxt, (W, S, u), sizes, S.bit_count())
                states = nxt
            seam1 = _expand(seam_bwd, S1)       # rows of column n adjacent to S1
            for (W, Sn, Un), sizes in states.items():
                touch = _expand(seam_fwd, Sn)   # rows of column 1 adjacent to Sn
                if touch & S1:
                    continue
                if W & ~touch:
                    continue
                if Un & ~seam1:
                    continue
                _accumulate(poly, sizes)
    return poly


def count_mis_dp(g, width_budget=DEFAULT_DP_WIDTH_BUDGET):
    """Exact |MIS(g)| via the slice DP."""
    return sum(size_polynomial_dp(g, width_budget).values())


def total_size_dp(g, width_budget=DEFAULT_DP_WIDTH_BUDGET):
    """T(g): the sum of |M| over all MIS's M."""
    return sum(r * c for r, c in size_polynomial_dp(g, width_budget).items())


def average_size(g, width_budget=DEFAULT_DP_WIDTH_BUDGET):
    """A(g) = T(g) / |MIS(g)| as an exact rational."""
    poly = size_polynomial_dp(g, width_budget)
    total = sum(r * c for r, c in poly.items())
    count = sum(poly.values())
    return Fraction(total, count)


def _bump(states, key, size, count):
    sizes = states.setdefault(key, {})
    sizes[size] = sizes.get(size, 0) + count


def _merge(states, key, sizes, shift):
    tgt = states.setdefault(key, {})
    for sz, cnt in sizes.items():
        tgt[sz + shift] = tgt.get(sz + shift, 0) + cnt


def _accumulate(poly, sizes):
    for sz, cnt in sizes.items():
        poly[sz] = poly.get(sz, 0) + cnt
