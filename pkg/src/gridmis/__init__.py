"""Exact statistics of maximal independent sets in grid-like graphs.

Builds rectangular grids, grid cylinders, Mobius strips and tori on a
common vertex set; enumerates and counts their maximal independent sets by
two independent engines; partitions MIS's into orbits under the graph's
automorphism group; and evaluates the matching closed forms in exact
integer/rational arithmetic, cross-verifying everything against everything
else.
"""

from .grids import (BudgetExceededError, DimensionError,
                    FamilyUnsupportedError, GridFamily, GridGraph, build,
                    degree_sequence, export_adjacency, mask_to_vertices,
                    slice_vertices, vertices_to_mask)
from .counting import (average_size, count_mis_dp, count_mis_for_parity,
                       enumerate_mis, format_mis_line, size_polynomial_dp,
                       total_size_dp, verify_mis, NOT_INDEPENDENT,
                       NOT_MAXIMAL, VALID_MIS)
from .symmetry import (AutomorphismGroup, OrbitPartition, apply_to_mask,
                       full_group, generator_group, horizontal_flip,
                       known_generators,
                       nimis_count, nimis_ratio_trend, orbit_partition,
                       orbit_report, symmetric_under, vertical_flip)
from .strings import (band_nimis_via_compositions, composition_orbits,
                      compositions, count_strings, dihedral_canonical,
                      generate_strings, psi, psi_c, psi_preimage, tube_psi,
                      vertically_symmetric_strings)
from .formulas import (average_2xn_exact, band_counts, fib, golden_ratio_ref,
                       mis_count_2xn, mobius_counts, nimis_2xn,
                       nimis_tube_3xn, size_distribution_2xn_cyclic,
                       total_size_2xn)
from .harness import (RunConfig, VerificationCase, format_report,
                      run_verification_suite, trend_report)

__version__ = "0.1.0"
