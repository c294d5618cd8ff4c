"""Automorphism groups of grid-like graphs and their action on MIS's.

An automorphism is stored as a tuple ``perm`` over column-major vertex
indices, with ``perm[k]`` the image of vertex k.  Groups are plain tuples
of such permutations, closed under composition and inverse, found either
by closing a known generator list or by a pruned backtracking search over
the whole graph.

Orbits of MIS's under the group give the non-isomorphic MIS count; the
orbit-stabilizer identity and the Burnside average are both checked on
every instance because they are cheap and catch search bugs immediately.
"""

from dataclasses import dataclass

from .grids import (BudgetExceededError, FamilyUnsupportedError, GridFamily,
                    build)
from .counting import enumerate_mis

DEFAULT_GROUP_BUDGET = 64  # max vertex count for the automorphism search

# Instances whose edge-set coincidences enlarge the automorphism group
# beyond the generic generator closure: square grids are D_4 rather than
# the four-element flip group, and the thin cylinder at n = 2 with m in
# {2, 4} degenerates to C_4 / the cube (likewise its fat transpose).
_EXTRA_SYMMETRIC = {
    (GridFamily.THIN_CYLINDER, 2, 2), (GridFamily.THIN_CYLINDER, 4, 2),
    (GridFamily.FAT_CYLINDER, 2, 2), (GridFamily.FAT_CYLINDER, 2, 4),
}


def identity_perm(g):
    return tuple(range(g.num_vertices))


def perm_from_vertex_map(g, f):
    """Build a permutation tuple from a vertex-level map, checking that it
    is a bijection preserving adjacency."""
    n_v = g.num_vertices
    perm = [None] * n_v
    for v in g.vertices():
        w = f(*v)
        perm[g.vertex_index(v)] = g.vertex_index(w)
    if sorted(perm) != list(range(n_v)):
        raise ValueError("vertex map is not a bijection")
    perm = tuple(perm)
    for k in range(n_v):
        image_nbrs = _apply_to_mask(perm, g.neighbor_masks[k])
        if image_nbrs != g.neighbor_masks[perm[k]]:
            raise ValueError("vertex map does not preserve adjacency")
    return perm


def compose(p, q):
    """(p after q): apply q first, then p."""
    return tuple(p[x] for x in q)


def invert(p):
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def apply_to_mask(perm, mask):
    """Image of a vertex bitmask under a permutation."""
    return _apply_to_mask(perm, mask)


def _apply_to_mask(perm, mask):
    out = 0
    while mask:
        k = (mask & -mask).bit_length() - 1
        out |= 1 << perm[k]
        mask &= mask - 1
    return out


def symmetric_under(mask, perm):
    """True iff the vertex set is fixed (setwise) by the automorphism."""
    return _apply_to_mask(perm, mask) == mask


def vertical_flip(g):
    """Column reversal (i, j) -> (n+1-i, j)."""
    return perm_from_vertex_map(g, lambda i, j: (g.n + 1 - i, j))


def horizontal_flip(g):
    """Row reversal (i, j) -> (i, m+1-j)."""
    return perm_from_vertex_map(g, lambda i, j: (i, g.m + 1 - j))


def known_generators(g):
    """Generator lists with a hardcoded geometric description.

    Grid: the two flips.  Thin cylinder: column flip plus the dihedral
    action on rows (rotation and reflection).  Fat cylinder: column
    rotation, column flip and row flip.  Other families have no complete
    published generator list and must use the generic search.
    """
    if g.family is GridFamily.GRID:
        return [vertical_flip(g), horizontal_flip(g)]
    if g.family is GridFamily.THIN_CYLINDER:
        row_rot = perm_from_vertex_map(g, lambda i, j: (i, j % g.m + 1))
        return [vertical_flip(g), row_rot, horizontal_flip(g)]
    if g.family is GridFamily.FAT_CYLINDER:
        col_rot = perm_from_vertex_map(g, lambda i, j: (i % g.n + 1, j))
        return [col_rot, vertical_flip(g), horizontal_flip(g)]
    raise FamilyUnsupportedError(
        f"no hardcoded generators for family {g.family.value}")


def closure(perms, n_vertices):
    """Smallest permutation set containing ``perms``, the identity, and all
    compositions."""
    ident = tuple(range(n_vertices))
    group = {ident}
    frontier = [p for p in perms if p not in group]
    group.update(frontier)
    while frontier:
        nxt = []
        for p in frontier:
            for q in list(group):
                for r in (compose(p, q), compose(q, p)):
                    if r not in group:
                        group.add(r)
                        nxt.append(r)
        frontier = nxt
    return tuple(sorted(group))


@dataclass(frozen=True)
class AutomorphismGroup:
    graph: object
    elements: tuple
    provenance: str  # "hardcoded-generators" or "generic-search"

    @property
    def order(self):
        return len(self.elements)


def generator_group(g):
    """Closure of the hardcoded generators, as a group object.

    Equals full_group except on instances with coincidental extra symmetry
    (see full_group); useful when the generic search is not wanted.
    """
    gens = known_generators(g)
    return AutomorphismGroup(graph=g, elements=closure(gens, g.num_vertices),
                             provenance="hardcoded-generators")


def full_group(g, budget=DEFAULT_GROUP_BUDGET):
    """The complete automorphism group, by pruned backtracking search.

    Where a hardcoded generator list exists its closure is asserted to be a
    subgroup of the searched group, and to equal it away from the known
    extra-symmetric coincidences (square grids; fat-cylinder instances
    whose wrap edges collapse onto grid edges or form a cube).
    """
    if g.family is GridFamily.TORUS:
        raise FamilyUnsupportedError("automorphism engines do not accept the torus")
    if g.num_vertices > budget:
        raise BudgetExceededError(
            f"{g.num_vertices} vertices exceed the group-search budget {budget}",
            budget)
    elements = _search_automorphisms(g)
    try:
        gens = known_generators(g)
    except FamilyUnsupportedError:
        gens = None
    if gens is not None:
        closed = closure(gens, g.num_vertices)
        searched = set(elements)
        assert set(closed) <= searched, "generator closure escaped the searched group"
        generic = not (g.family is GridFamily.GRID and g.m == g.n) \
            and (g.family, g.m, g.n) not in _EXTRA_SYMMETRIC
        if generic:
            assert set(closed) == searched, (
                f"generator closure (order {len(closed)}) != searched group "
                f"(order {len(elements)}) on {g.family.value} {g.m}x{g.n}")
    return AutomorphismGroup(graph=g, elements=elements, provenance="generic-search")


def _search_automorphisms(g):
    """All adjacency-preserving vertex bijections, in sorted order.

    Vertices are matched in BFS order so every new vertex is constrained
    by an already-mapped neighbour; candidate images must share the
    (degree, sorted distance profile) invariant.
    """
    n_v = g.num_vertices
    nbr = g.neighbor_masks
    dist = _all_pairs_distances(g)
    invariant = [
        (nbr[v].bit_count(), tuple(sorted(dist[v]))) for v in range(n_v)
    ]

    order = _bfs_order(g)
    found = []
    perm = [None] * n_v
    used = [False] * n_v

    def extend(pos, domain_mask, image_mask):
        if pos == n_v:
            found.append(tuple(perm))
            return
        v = order[pos]
        mapped_nbrs = _apply_partial(perm, nbr[v] & domain_mask)
        for w in range(n_v):
            if used[w] or invariant[w] != invariant[v]:
                continue
            if nbr[w] & image_mask != mapped_nbrs:
                continue
            perm[v] = w
            used[w] = True
            extend(pos + 1, domain_mask | (1 << v), image_mask | (1 << w))
            perm[v] = None
            used[w] = False

    extend(0, 0, 0)
    return tuple(sorted(found))


def _apply_partial(perm, mask):
    out = 0
    while mask:
        k = (mask & -mask).bit_length() - 1
        out |= 1 << perm[k]
        mask &= mask - 1
    return out


def _bfs_order(g):
    n_v = g.num_vertices
    seen = [False] * n_v
    order = []
    for root in range(n_v):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            mask = g.neighbor_masks[v]
            while mask:
                k = (mask & -mask).bit_length() - 1
                if not seen[k]:
                    seen[k] = True
                    queue.append(k)
                mask &= mask - 1
    return order


def _all_pairs_distances(g):
    n_v = g.num_vertices
    rows = []
    for src in range(n_v):
        d = [-1] * n_v
        d[src] = 0
        queue = [src]
        while queue:
            v = queue.pop(0)
            mask = g.neighbor_masks[v]
            while mask:
                k = (mask & -mask).bit_length() - 1
                if d[k] < 0:
                    d[k] = d[v] + 1
                    queue.append(k)
                mask &= mask - 1
        rows.append(tuple(d))
    return rows


# ---------------------------------------------------------------------------
# Orbits of MIS's
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrbitPartition:
    """Disjoint orbits covering an MIS list, with per-orbit stabilizer orders.

    ``orbits`` holds sorted tuples of indices into the MIS list, ordered by
    their canonical representative (the smallest index).
    """
    orbits: tuple
    stabilizer_orders: tuple
    group_order: int

    @property
    def num_orbits(self):
        return len(self.orbits)


def orbit_partition(g, mis_list, group):
    """Partition a canonical MIS list into orbits under the group.

    The orbit-stabilizer identity |orbit| * |stabilizer| = |group| is
    asserted for every orbit.
    """
    index_of = {mask: k for k, mask in enumerate(mis_list)}
    if len(index_of) != len(mis_list):
        raise ValueError("MIS list contains duplicates")
    seen = [False] * len(mis_list)
    orbits = []
    stab_orders = []
    for k, mask in enumerate(mis_list):
        if seen[k]:
            continue
        members = set()
        stab = 0
        for perm in group.elements:
            image = _apply_to_mask(perm, mask)
            if image == mask:
                stab += 1
            j = index_of.get(image)
            if j is None:
                raise ValueError(
                    "automorphism image is not in the MIS list; list is not "
                    "all of MIS(g)")
            members.add(j)
        for j in members:
            seen[j] = True
        assert len(members) * stab == group.order, \
            f"orbit-stabilizer violated: {len(members)} * {stab} != {group.order}"
        orbits.append(tuple(sorted(members)))
        stab_orders.append(stab)
    return OrbitPartition(orbits=tuple(orbits),
                          stabilizer_orders=tuple(stab_orders),
                          group_order=group.order)


def nimis_count(g, enumeration_budget=None, group_budget=DEFAULT_GROUP_BUDGET):
    """|NIMIS(g)|: the number of MIS orbits under the automorphism group.

    Cross-checked against the Burnside average (1/|A|) sum_g fix(g) over
    the enumerated MIS list.
    """
    from .counting import DEFAULT_ENUMERATION_BUDGET
    budget = enumeration_budget or DEFAULT_ENUMERATION_BUDGET
    mis_list = list(enumerate_mis(g, budget))
    group = full_group(g, group_budget)
    part = orbit_partition(g, mis_list, group)
    fixed_total = sum(
        sum(1 for mask in mis_list if _apply_to_mask(perm, mask) == mask)
        for perm in group.elements)
    assert fixed_total == part.num_orbits * group.order, \
        "Burnside average disagrees with the direct orbit count"
    return part.num_orbits


def orbit_report(g, mis_list, part):
    """Orbit-report text: ``orbit-id: size, stabilizer-order, representative``."""
    from .counting import format_mis_line
    lines = []
    for oid, (orbit, stab) in enumerate(zip(part.orbits, part.stabilizer_orders)):
        rep = format_mis_line(g, mis_list[orbit[0]])
        lines.append(f"{oid}: {len(orbit)}, {stab}, {rep}")
    return "\n".join(lines) + "\n"


def nimis_ratio_trend(m, n_range, family=GridFamily.GRID,
                      enumeration_budget=None):
    """|NIMIS|/|MIS| per n, with the deviation from 1/4.

    Returns rows (n, ratio, deviation) of exact rationals; the limit of the
    ratio for fixed m is 1/4, and every computed value stays >= 1/4.
    """
    from fractions import Fraction
    rows = []
    for n in n_range:
        g = build(family, m, n)
        from .counting import DEFAULT_ENUMERATION_BUDGET
        budget = enumeration_budget or DEFAULT_ENUMERATION_BUDGET
        mis_list = list(enumerate_mis(g, budget))
        orbits = nimis_count(g, enumeration_budget=budget)
        ratio = Fraction(orbits, len(mis_list))
        rows.append((n, ratio, ratio - Fraction(1, 4)))
    return rows
