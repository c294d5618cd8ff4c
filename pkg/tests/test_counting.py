from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridmis.grids import (BudgetExceededError, FamilyUnsupportedError,
                           GridFamily, build, mask_to_vertices,
                           vertices_to_mask)
from gridmis.counting import (NOT_INDEPENDENT, NOT_MAXIMAL, VALID_MIS,
                              average_size, count_mis_dp, count_mis_for_parity,
                              enumerate_mis, format_mis_line,
                              size_polynomial_dp, total_size_dp, verify_mis)
from gridmis.formulas import fib


def masks(g):
    return list(enumerate_mis(g))


def test_c4_has_exactly_the_two_diagonals():
    g = build(GridFamily.GRID, 2, 2)
    got = [set(mask_to_vertices(g, m)) for m in masks(g)]
    assert got == [{(1, 2), (2, 1)}, {(1, 1), (2, 2)}]


def test_grid_2x3_has_four_sets():
    assert len(masks(build(GridFamily.GRID, 2, 3))) == 4 == 2 * fib(3)


def test_triangular_prism_has_six_pairs():
    g = build(GridFamily.THIN_CYLINDER, 3, 2)
    got = masks(g)
    assert len(got) == 6
    assert all(m.bit_count() == 2 for m in got)


def test_canonical_order_is_bitstring_lexicographic():
    g = build(GridFamily.GRID, 3, 3)
    def key(mask):
        return tuple((mask >> k) & 1 for k in range(g.num_vertices))
    got = masks(g)
    assert got == sorted(got, key=key)


def test_stream_has_no_duplicates_and_all_valid():
    for family in (GridFamily.GRID, GridFamily.FAT_CYLINDER,
                   GridFamily.THIN_CYLINDER, GridFamily.MOBIUS):
        g = build(family, 3, 5)
        got = masks(g)
        assert len(got) == len(set(got))
        assert all(verify_mis(g, m)[0] == VALID_MIS for m in got)


def test_enumeration_rejects_torus():
    with pytest.raises(FamilyUnsupportedError):
        list(enumerate_mis(build(GridFamily.TORUS, 3, 3)))


def test_enumeration_budget():
    g = build(GridFamily.GRID, 5, 8)
    with pytest.raises(BudgetExceededError) as exc:
        list(enumerate_mis(g, budget=36))
    assert exc.value.bound == 36
    assert "36" in str(exc.value)


def test_dp_rejects_torus_and_wide_graphs():
    with pytest.raises(FamilyUnsupportedError):
        count_mis_dp(build(GridFamily.TORUS, 3, 3))
    with pytest.raises(BudgetExceededError):
        count_mis_dp(build(GridFamily.GRID, 13, 2), width_budget=12)


@pytest.mark.parametrize("n", range(2, 13))
def test_dp_matches_fibonacci_on_2xn(n):
    assert count_mis_dp(build(GridFamily.GRID, 2, n)) == 2 * fib(n)


@pytest.mark.parametrize("family", [GridFamily.GRID, GridFamily.FAT_CYLINDER,
                                    GridFamily.THIN_CYLINDER, GridFamily.MOBIUS])
@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_oracle_equals_dp(family, m, n):
    g = build(family, m, n)
    got = masks(g)
    poly = size_polynomial_dp(g)
    assert len(got) == count_mis_dp(g) == sum(poly.values())
    assert dict(Counter(x.bit_count() for x in got)) == poly


def test_fat_cylinder_2x5_count_matches_oracle():
    g = build(GridFamily.FAT_CYLINDER, 2, 5)
    assert count_mis_dp(g) == len(masks(g))


def test_size_polynomial_examples():
    assert size_polynomial_dp(build(GridFamily.GRID, 2, 2)) == {2: 2}
    # r = 2 coefficient of the fat cylinder 2x4: 2(C(2,2) + C(1,1)) = 4
    assert size_polynomial_dp(build(GridFamily.FAT_CYLINDER, 2, 4))[2] == 4
    mob = size_polynomial_dp(build(GridFamily.MOBIUS, 2, 5))
    assert all(r % 2 == 1 for r in mob)


def test_parity_of_sizes_in_cyclic_2xn():
    for n in range(3, 9):
        fat = size_polynomial_dp(build(GridFamily.FAT_CYLINDER, 2, n))
        assert all(r % 2 == 0 for r in fat)
        mob = size_polynomial_dp(build(GridFamily.MOBIUS, 2, n))
        assert all(r % 2 == 1 for r in mob)


def test_average_size_values():
    assert average_size(build(GridFamily.GRID, 2, 2)) == 2
    assert average_size(build(GridFamily.GRID, 2, 3)) == Fraction(5, 2)


def test_total_size_dp():
    assert total_size_dp(build(GridFamily.GRID, 2, 2)) == 4
    assert total_size_dp(build(GridFamily.GRID, 2, 3)) == 10


def test_no_two_adjacent_empty_columns():
    # every MIS meets every pair of adjacent slices, cyclically for the
    # column-wrapped families
    for family in (GridFamily.GRID, GridFamily.FAT_CYLINDER,
                   GridFamily.THIN_CYLINDER, GridFamily.MOBIUS):
        g = build(family, 3, 5)
        cyclic = family in (GridFamily.FAT_CYLINDER, GridFamily.MOBIUS)
        for mask in masks(g):
            occupied = [bool(mask & g.column_mask(i)) for i in range(1, g.n + 1)]
            for c in range(g.n - 1):
                assert occupied[c] or occupied[c + 1]
            if cyclic:
                assert occupied[-1] or occupied[0]


def test_verify_mis_classifications():
    g = build(GridFamily.GRID, 2, 2)
    status, witness = verify_mis(g, {(1, 1), (2, 2)})
    assert status == VALID_MIS and witness is None
    status, witness = verify_mis(g, {(1, 1), (2, 1)})
    assert status == NOT_INDEPENDENT
    assert set(witness) == {(1, 1), (2, 1)}
    g = build(GridFamily.GRID, 2, 3)
    status, witness = verify_mis(g, {(1, 1)})
    assert status == NOT_MAXIMAL
    # any uncovered vertex is a legal witness; {(1,1)} leaves these three
    assert witness in {(2, 2), (3, 1), (3, 2)}
    k = g.vertex_index(witness)
    assert g.neighbor_masks[k] & vertices_to_mask(g, [(1, 1)]) == 0
    status, _ = verify_mis(g, vertices_to_mask(g, [(1, 1), (3, 2)]))
    assert status == VALID_MIS


@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_verify_mis_agrees_with_definition(data):
    family = data.draw(st.sampled_from([GridFamily.GRID, GridFamily.FAT_CYLINDER,
                                        GridFamily.THIN_CYLINDER, GridFamily.MOBIUS]))
    m = data.draw(st.integers(2, 4))
    n = data.draw(st.integers(2, 5))
    g = build(family, m, n)
    mask = data.draw(st.integers(0, (1 << g.num_vertices) - 1))
    status, witness = verify_mis(g, mask)
    independent = all(g.neighbor_masks[k] & mask == 0
                      for k in range(g.num_vertices) if mask >> k & 1)
    covered = all(mask >> k & 1 or g.neighbor_masks[k] & mask
                  for k in range(g.num_vertices))
    if not independent:
        assert status == NOT_INDEPENDENT
        u, v = witness
        assert g.has_edge(u, v)
        assert mask >> g.vertex_index(u) & 1 and mask >> g.vertex_index(v) & 1
    elif not covered:
        assert status == NOT_MAXIMAL
        k = g.vertex_index(witness)
        assert mask >> k & 1 == 0 and g.neighbor_masks[k] & mask == 0
    else:
        assert status == VALID_MIS


def test_parity_engine_accepts_torus():
    assert count_mis_for_parity(build(GridFamily.TORUS, 3, 3)) % 2 == 0
    # and matches the ordinary engines where those are allowed
    g = build(GridFamily.GRID, 3, 4)
    assert count_mis_for_parity(g) == count_mis_dp(g)


def test_mis_parity_theorems_small():
    for m in range(2, 5):
        for n in range(2, 5):
            for family in GridFamily:
                g = build(family, m, n)
                assert count_mis_for_parity(g) % 2 == 0, (family, m, n)


def test_format_mis_line():
    g = build(GridFamily.GRID, 2, 3)
    mask = vertices_to_mask(g, [(1, 1), (3, 2)])
    assert format_mis_line(g, mask) == "2;(1,1),(3,2)"
