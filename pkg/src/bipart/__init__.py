"""bipart: exact 0-1 matrix counting over the partition dominance lattice.

The library computes the invariant s(alpha, beta), the number of 0-1
matrices with row sums alpha and column sums beta, entirely in exact
integer arithmetic; builds the pairing matrix S(n) and the unitriangular
transition matrix M(n) = (s(alpha, transpose(beta))) over P(n); inverts
M(n) over the integers; and converts coefficient vectors between the two
sides of the resulting linear system.
"""

from .counting import (
    DEFAULT_CELL_LIMIT,
    CountingMemo,
    gale_ryser_feasible,
    s_bruteforce,
    s_count,
)
from .errors import (
    AmbiguousMaximumError,
    BasisMismatchError,
    BipartError,
    LimitError,
    PartitionParseError,
    UnitDiagonalError,
    WeightMismatchError,
)
from .matrices import (
    DEFAULT_MAX_N,
    CoefficientVector,
    TransitionMatrix,
    TriangularReport,
    WavefrontReport,
    c_from_d,
    d_from_c,
    invert_unitriangular,
    matrix_from_json,
    matrix_to_csv,
    matrix_to_json,
    pairing_matrix,
    transition_matrix,
    vector_from_json,
    vector_to_json,
    verify_triangular,
    wavefront,
)
from .partitions import (
    MAX_N,
    Composition,
    Partition,
    PartitionOrder,
    canonical_key,
    dominance_covers,
    dominates,
    format_partition,
    parse_partition,
    partitions_of,
    transpose,
)
from .ring import (
    BASES,
    PshVector,
    basis_element,
    d_by_pairing,
    multiply,
    pair,
    pshvector_from_json,
    pshvector_to_json,
    vector_from_c,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # partitions
    "MAX_N",
    "Partition",
    "Composition",
    "PartitionOrder",
    "partitions_of",
    "transpose",
    "dominates",
    "canonical_key",
    "dominance_covers",
    "parse_partition",
    "format_partition",
    # counting
    "DEFAULT_CELL_LIMIT",
    "CountingMemo",
    "s_bruteforce",
    "s_count",
    "gale_ryser_feasible",
    # ring
    "BASES",
    "PshVector",
    "basis_element",
    "multiply",
    "pair",
    "vector_from_c",
    "d_by_pairing",
    "pshvector_to_json",
    "pshvector_from_json",
    # matrices
    "DEFAULT_MAX_N",
    "TransitionMatrix",
    "CoefficientVector",
    "pairing_matrix",
    "transition_matrix",
    "invert_unitriangular",
    "d_from_c",
    "c_from_d",
    "WavefrontReport",
    "wavefront",
    "TriangularReport",
    "verify_triangular",
    "matrix_to_json",
    "matrix_from_json",
    "matrix_to_csv",
    "vector_to_json",
    "vector_from_json",
    # errors
    "BipartError",
    "WeightMismatchError",
    "BasisMismatchError",
    "PartitionParseError",
    "LimitError",
    "UnitDiagonalError",
    "AmbiguousMaximumError",
]
