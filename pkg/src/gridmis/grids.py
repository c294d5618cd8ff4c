"""Construction of grid-like graphs on the vertex set {(i,j) : 1<=i<=n, 1<=j<=m}.

Vertices are pairs (i, j) where i is the column index (1..n) and j is the
row index (1..m).  Five families share this vertex set:

* ``GRID``           -- the rectangular grid, P_m box P_n
* ``FAT_CYLINDER``   -- grid plus column-wrap edges {(1,j),(n,j)}
* ``THIN_CYLINDER``  -- grid plus row-wrap edges {(i,1),(i,m)}
* ``MOBIUS``         -- grid plus twisted wrap edges {(1,i),(n,m+1-i)}
* ``TORUS``          -- grid plus both cylinder wrap sets

Edge sets are sets of unordered pairs, so wrap edges that coincide with
grid edges (e.g. the thin cylinder with m = 2) deduplicate silently.

A built graph is immutable and carries both a per-vertex neighbour bitmask
and a per-column slice decomposition, in column-major vertex order:
vertex (i, j) has bit index (i-1)*m + (j-1).
"""

from dataclasses import dataclass, field
from enum import Enum


class DimensionError(ValueError):
    """Raised when (m, n) violates a family's minimum dimensions."""


class FamilyUnsupportedError(ValueError):
    """Raised when an engine does not accept the graph's family."""


class BudgetExceededError(ValueError):
    """Raised when an instance exceeds a configurable work budget."""

    def __init__(self, message, bound):
        super().__init__(message)
        self.bound = bound


class GridFamily(Enum):
    GRID = "grid"
    FAT_CYLINDER = "fat-cylinder"
    THIN_CYLINDER = "thin-cylinder"
    MOBIUS = "mobius"
    TORUS = "torus"


# Minimum (m, n) per family.  A wrap edge set must be nonempty and free of
# self-loops: the fat cylinder and torus need n >= 2, the thin cylinder and
# torus need m >= 2, and the Mobius strip needs both.
_MIN_DIMS = {
    GridFamily.GRID: (1, 1),
    GridFamily.FAT_CYLINDER: (1, 2),
    GridFamily.THIN_CYLINDER: (2, 1),
    GridFamily.MOBIUS: (2, 2),
    GridFamily.TORUS: (2, 2),
}


@dataclass(frozen=True)
class GridGraph:
    """An immutable grid-like graph.

    ``edges`` is a frozenset of ordered 2-tuples of vertices (each edge
    stored once, endpoints sorted).  ``neighbor_masks`` maps the bit index
    of each vertex to the bitmask of its neighbours.
    """

    family: GridFamily
    m: int
    n: int
    edges: frozenset = field(repr=False)
    neighbor_masks: tuple = field(repr=False)

    @property
    def num_vertices(self):
        return self.m * self.n

    def vertex_index(self, v):
        """Bit index of vertex v = (i, j), column-major."""
        i, j = v
        if not (1 <= i <= self.n and 1 <= j <= self.m):
            raise IndexError(f"vertex {v} outside 1..{self.n} x 1..{self.m}")
        return (i - 1) * self.m + (j - 1)

    def vertex_at(self, k):
        """Inverse of vertex_index."""
        i, j = divmod(k, self.m)
        return (i + 1, j + 1)

    def vertices(self):
        """All vertices in column-major order."""
        return [(i, j) for i in range(1, self.n + 1) for j in range(1, self.m + 1)]

    def column_mask(self, i):
        """Bitmask of the vertices in column i."""
        if not (1 <= i <= self.n):
            raise IndexError(f"column index {i} out of range 1..{self.n}")
        return ((1 << self.m) - 1) << ((i - 1) * self.m)

    def degree(self, v):
        return self.neighbor_masks[self.vertex_index(v)].bit_count()

    def has_edge(self, u, v):
        return (self.neighbor_masks[self.vertex_index(u)] >> self.vertex_index(v)) & 1 == 1


def build(family, m, n):
    """Build a grid-like graph with the family's exact edge set.

    Raises DimensionError (naming the violated bound) if (m, n) is below
    the family's minimum dimensions.
    """
    if not isinstance(family, GridFamily):
        family = GridFamily(family)
    min_m, min_n = _MIN_DIMS[family]
    if m < min_m:
        raise DimensionError(f"{family.value} requires m >= {min_m}, got m = {m}")
    if n < min_n:
        raise DimensionError(f"{family.value} requires n >= {min_n}, got n = {n}")

    edges = set()
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if j < m:
                edges.add(((i, j), (i, j + 1)))
            if i < n:
                edges.add(((i, j), (i + 1, j)))
    if family in (GridFamily.FAT_CYLINDER, GridFamily.TORUS):
        for j in range(1, m + 1):
            edges.add(_sorted_edge((1, j), (n, j)))
    if family in (GridFamily.THIN_CYLINDER, GridFamily.TORUS):
        for i in range(1, n + 1):
            edges.add(_sorted_edge((i, 1), (i, m)))
    if family is GridFamily.MOBIUS:
        for i in range(1, m + 1):
            edges.add(_sorted_edge((1, i), (n, m + 1 - i)))

    masks = [0] * (m * n)
    for u, v in edges:
        ku = (u[0] - 1) * m + (u[1] - 1)
        kv = (v[0] - 1) * m + (v[1] - 1)
        masks[ku] |= 1 << kv
        masks[kv] |= 1 << ku
    return GridGraph(family=family, m=m, n=n,
                     edges=frozenset(edges), neighbor_masks=tuple(masks))


def _sorted_edge(u, v):
    return (u, v) if u <= v else (v, u)


def slice_vertices(g, i):
    """The i-th slice: all vertices with column index i."""
    if not (1 <= i <= g.n):
        raise IndexError(f"slice index {i} out of range 1..{g.n}")
    return {(i, j) for j in range(1, g.m + 1)}


def degree_sequence(g):
    """Sorted degree multiset, used for pruning and isomorphy sanity checks."""
    return tuple(sorted(mask.bit_count() for mask in g.neighbor_masks))


def induced_slice_edges(g, i):
    """Edges of the subgraph induced by slice i."""
    sl = slice_vertices(g, i)
    return {e for e in g.edges if e[0] in sl and e[1] in sl}


def export_adjacency(g):
    """Adjacency-list text: one line per vertex ``i,j: i1,j1 i2,j2 ...``.

    Vertices and neighbour lists are ordered column-major, so the output
    is deterministic and diffable.
    """
    lines = []
    for v in g.vertices():
        nbrs = _mask_vertices(g, g.neighbor_masks[g.vertex_index(v)])
        nbr_text = " ".join(f"{i},{j}" for i, j in nbrs)
        lines.append(f"{v[0]},{v[1]}: {nbr_text}")
    return "\n".join(lines) + "\n"


def mask_to_vertices(g, mask):
    """Decode a vertex bitmask to a column-major sorted list of vertices."""
    return _mask_vertices(g, mask)


def vertices_to_mask(g, vs):
    """Encode an iterable of vertices as a bitmask."""
    mask = 0
    for v in vs:
        mask |= 1 << g.vertex_index(v)
    return mask


def _mask_vertices(g, mask):
    out = []
    while mask:
        k = (mask & -mask).bit_length() - 1
        out.append(g.vertex_at(k))
        mask &= mask - 1
    return out
