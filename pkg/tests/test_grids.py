import pytest

from gridmis.grids import (DimensionError, GridFamily, build, degree_sequence,
                           export_adjacency, induced_slice_edges,
                           mask_to_vertices, slice_vertices, vertices_to_mask)

ALL_FAMILIES = list(GridFamily)


def test_grid_4x6_counts():
    g = build(GridFamily.GRID, 4, 6)
    assert g.num_vertices == 24
    assert len(g.edges) == 4 * 5 + 6 * 3 == 38


@pytest.mark.parametrize("family", ALL_FAMILIES)
@pytest.mark.parametrize("m,n", [(2, 2), (2, 5), (3, 4), (4, 3), (5, 5)])
def test_vertex_count_is_mn(family, m, n):
    g = build(family, m, n)
    assert g.num_vertices == m * n
    assert len(g.vertices()) == m * n


def test_thin_cylinder_m2_equals_grid():
    # wrap edges {(i,1),(i,2)} coincide with grid edges and deduplicate
    assert build(GridFamily.THIN_CYLINDER, 2, 5).edges == build(GridFamily.GRID, 2, 5).edges


def test_fat_cylinder_n2_equals_grid():
    assert build(GridFamily.FAT_CYLINDER, 3, 2).edges == build(GridFamily.GRID, 3, 2).edges


def test_mobius_2x3_wrap_edges():
    g = build(GridFamily.MOBIUS, 2, 3)
    assert g.num_vertices == 6
    assert ((1, 1), (3, 2)) in g.edges
    assert ((1, 2), (3, 1)) in g.edges
    assert not g.has_edge((1, 1), (3, 1))


def test_mobius_wrap_edge_count():
    for m, n in [(2, 4), (3, 5), (4, 6)]:
        g = build(GridFamily.MOBIUS, m, n)
        base = build(GridFamily.GRID, m, n)
        wraps = g.edges - base.edges
        assert len(wraps) == m
        assert wraps == {tuple(sorted(((1, i), (n, m + 1 - i)))) for i in range(1, m + 1)}


def test_torus_adds_both_wrap_sets():
    t = build(GridFamily.TORUS, 3, 4)
    fat = build(GridFamily.FAT_CYLINDER, 3, 4)
    thin = build(GridFamily.THIN_CYLINDER, 3, 4)
    assert t.edges == fat.edges | thin.edges


@pytest.mark.parametrize("m,n", [(2, 3), (3, 3), (3, 5), (4, 4)])
def test_edge_set_nesting(m, n):
    grid = build(GridFamily.GRID, m, n).edges
    fat = build(GridFamily.FAT_CYLINDER, m, n).edges
    thin = build(GridFamily.THIN_CYLINDER, m, n).edges
    torus = build(GridFamily.TORUS, m, n).edges
    assert grid <= fat <= torus
    assert grid <= thin <= torus


def test_simple_graph_no_self_loops():
    for family in ALL_FAMILIES:
        g = build(family, 3, 4)
        assert all(u != v for u, v in g.edges)
        assert all(g.neighbor_masks[k] >> k & 1 == 0 for k in range(g.num_vertices))


def test_slice_contents():
    g = build(GridFamily.GRID, 2, 3)
    assert slice_vertices(g, 2) == {(2, 1), (2, 2)}
    g = build(GridFamily.MOBIUS, 4, 6)
    assert slice_vertices(g, 6) == {(6, j) for j in range(1, 5)}


def test_slice_index_out_of_range():
    g = build(GridFamily.GRID, 2, 3)
    with pytest.raises(IndexError):
        slice_vertices(g, 0)
    with pytest.raises(IndexError):
        slice_vertices(g, 4)


@pytest.mark.parametrize("family,m,n", [
    (GridFamily.GRID, 3, 4), (GridFamily.FAT_CYLINDER, 3, 4),
    (GridFamily.MOBIUS, 3, 4), (GridFamily.THIN_CYLINDER, 4, 3),
])
def test_slices_induce_path_or_cycle(family, m, n):
    g = build(family, m, n)
    expect_cycle = family is GridFamily.THIN_CYLINDER and m >= 3
    for i in range(1, n + 1):
        edges = induced_slice_edges(g, i)
        assert len(edges) == (m if expect_cycle else m - 1)


def test_thin_cylinder_m2_slices_are_paths():
    g = build(GridFamily.THIN_CYLINDER, 2, 4)
    for i in range(1, 5):
        assert len(induced_slice_edges(g, i)) == 1


def test_degree_sequences():
    assert degree_sequence(build(GridFamily.GRID, 2, 2)) == (2, 2, 2, 2)
    # the thin cylinder 3x2 is the triangular prism, 3-regular
    assert degree_sequence(build(GridFamily.THIN_CYLINDER, 3, 2)) == (3,) * 6
    assert degree_sequence(build(GridFamily.TORUS, 3, 3)) == (4,) * 9


@pytest.mark.parametrize("m,n", [(2, 3), (3, 4), (2, 5), (4, 2)])
def test_fat_mn_isomorphic_to_thin_nm_invariants(m, n):
    fat = build(GridFamily.FAT_CYLINDER, m, n)
    thin = build(GridFamily.THIN_CYLINDER, n, m)
    assert degree_sequence(fat) == degree_sequence(thin)
    assert len(fat.edges) == len(thin.edges)
    assert fat.num_vertices == thin.num_vertices


@pytest.mark.parametrize("family,m,n", [
    (GridFamily.GRID, 0, 3), (GridFamily.GRID, 3, 0),
    (GridFamily.MOBIUS, 1, 3), (GridFamily.MOBIUS, 3, 1),
    (GridFamily.THIN_CYLINDER, 1, 4),
    (GridFamily.FAT_CYLINDER, 2, 1),
    (GridFamily.TORUS, 1, 4), (GridFamily.TORUS, 4, 1),
])
def test_dimension_errors_name_the_bound(family, m, n):
    with pytest.raises(DimensionError) as exc:
        build(family, m, n)
    assert ">=" in str(exc.value)


def test_build_accepts_family_string():
    g = build("mobius", 2, 3)
    assert g.family is GridFamily.MOBIUS


def test_export_adjacency_golden():
    g = build(GridFamily.GRID, 2, 2)
    assert export_adjacency(g) == (
        "1,1: 1,2 2,1\n"
        "1,2: 1,1 2,2\n"
        "2,1: 1,1 2,2\n"
        "2,2: 1,2 2,1\n"
    )


def test_mask_vertex_round_trip():
    g = build(GridFamily.GRID, 3, 3)
    vs = [(1, 1), (2, 3), (3, 2)]
    assert mask_to_vertices(g, vertices_to_mask(g, vs)) == sorted(vs)


def test_column_major_indexing():
    g = build(GridFamily.GRID, 3, 2)
    order = [g.vertex_index(v) for v in g.vertices()]
    assert order == list(range(6))
    assert g.vertex_at(g.vertex_index((2, 3))) == (2, 3)
