"""Exact Fuss-Catalan triangles and the combinatorial families they count."""

from .lattice import PathCountQuery, count_constrained_paths
from .partitions import (
    DoublePartition,
    NoncrossingPartition,
    box_count,
    box_distribution,
    enumerate_double_partitions,
    enumerate_matching_double_partitions,
    enumerate_noncrossing_matchings,
    enumerate_noncrossing_partitions,
    verify_f_recurrence,
)
from .sequences import SequenceTable, check_p5_table, check_signed_sums, load_reference_data
from .triangle import (
    InexactDivisionError,
    Triangle,
    TriangleParams,
    binomial,
    build_triangle,
    fuss_catalan,
    row_sum,
    signed_row_sum,
    triangle_alternating,
    triangle_closed_form,
    triangle_closed_form_cell,
    triangle_convolution,
    verify_binomial_identity_e4,
)

__version__ = "0.1.0"
