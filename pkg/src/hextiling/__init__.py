"""Exact enumeration of rhombus tilings of semi-regular hexagons.

The package counts tilings of hexagons with sides (a, m, a, a, m, a) and all
angles 120 degrees: totals, counts constrained to contain a fixed rhombus on
the symmetry axis, and the proportion between the two.  Every route to a
number is implemented at least twice -- closed forms, determinants of
lattice-path matrices, and a brute-force tiling enumerator -- and the test
suite cross-checks them against each other exactly.
"""

from .exact import (
    Polynomial,
    SingularParameterError,
    binomial,
    double_factorial,
    hypergeometric_sum,
    lagrange_interpolate,
    reciprocal_factorial,
    shifted_factorial,
)
from .hexagon import (
    Cell,
    HexagonSpec,
    NormalizedParams,
    Parity,
    PathFamilySpec,
    Region,
    RegionKind,
    axis_pair,
    axis_positions,
    axis_rhombus_cells,
    box_region,
    build_region,
    cells_from_text,
    full_hexagon_region,
    hexagon_cells,
    hexagon_of,
    marked_path_family,
    normalize,
    path_family,
    pentagon_path_family,
    pentagon_region,
    region_from_cells,
    region_to_text,
)
from .matrices import (
    check_column_relation,
    determinant,
    extract_reduced_polynomial,
    lower_weighted_matrix,
    reduced_lower_matrix,
    reduced_prefactor,
    row_scale_product,
    upper_count_matrix,
)
from .formulas import (
    arcsine_limit,
    axis_sum,
    central_axis_closed_form,
    central_axis_sum,
    central_sum_recurrence_residue,
    fixed_count_even,
    fixed_count_odd,
    hyp_chain_check,
    lower_weighted_closed_form,
    macmahon_count,
    proportion,
    proportion_balanced_form,
    proportion_nm,
    proportion_series_form,
    reduced_poly_value,
    upper_count_closed_form,
)
from .oracle import (
    DEFAULT_CELL_LIMIT,
    RegionTooLargeError,
    Tiling,
    axis_occupancy_tally,
    count_tilings,
    count_with_fixed_rhombus,
    enumerate_tilings,
    factorization_check,
    tiling_to_text,
    weighted_count,
)

__version__ = "0.1.0"
