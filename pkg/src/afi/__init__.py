"""Exact-arithmetic toolkit for absolutely flat idempotent matrices.

An n-by-n real idempotent A (A*A = A) whose entries all equal +-1/k is
handled through its integer scale matrix B = k*A, a +-1 matrix with
B*B = k*B.  The package constructs, verifies, classifies, enumerates and
counts such matrices, everything in exact integer arithmetic.
"""

__version__ = "0.1.0"

from .canonical import (
    StandardForm,
    TypePartition,
    canonical_rep,
    col_types,
    normalize,
    row_types,
    to_standard_form,
)
from .census import (
    CensusRecord,
    census_general,
    census_partition,
    census_rank2,
    read_records,
    run_work_item,
    write_records,
)
from .construct import (
    Rank2Params,
    block_construction,
    construct_for_triple,
    enumerate_rank2_params,
    pm_blocks,
    rank1_canonical,
    rank2_standard,
)
from .core import (
    SignMatrix,
    SignedPermutation,
    apply_similarity,
    format_matrix,
    multiply,
    parse_matrix,
    transpose,
)
from .equivalence import are_equivalent, swap_x, swap_y
from .feasibility import (
    CountBounds,
    FeasibilityVerdict,
    InfeasibleTripleError,
    Triple,
    check_triple,
    feasible_triples,
    rank2_bounds,
)
from .verify import VerifyReport, exact_rank, full_report, is_flat_idempotent

__all__ = [
    "CensusRecord",
    "CountBounds",
    "FeasibilityVerdict",
    "InfeasibleTripleError",
    "Rank2Params",
    "SignMatrix",
    "SignedPermutation",
    "StandardForm",
    "Triple",
    "TypePartition",
    "VerifyReport",
    "apply_similarity",
    "are_equivalent",
    "block_construction",
    "canonical_rep",
    "census_general",
    "census_partition",
    "census_rank2",
    "check_triple",
    "col_types",
    "construct_for_triple",
    "enumerate_rank2_params",
    "exact_rank",
    "feasible_triples",
    "format_matrix",
    "full_report",
    "is_flat_idempotent",
    "multiply",
    "normalize",
    "parse_matrix",
    "pm_blocks",
    "rank1_canonical",
    "rank2_bounds",
    "rank2_standard",
    "read_records",
    "row_types",
    "run_work_item",
    "swap_x",
    "swap_y",
    "to_standard_form",
    "transpose",
    "write_records",
]
