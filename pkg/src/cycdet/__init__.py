"""Exact sign analysis for square matrices whose rows weakly decrease
cyclically from the diagonal.

The library builds the gap graph of such a matrix, classifies its strongly
connected components, describes every solution of Aᵀx = λe, certifies the
sign of det A without evaluating the determinant, and runs a battery of
P-matrix tests — all in exact rational arithmetic, cross-checked against a
fraction-free determinant oracle.
"""

from .errors import InternalConsistencyError, MatrixFormatError, NotInClassError, Violation
from .formats import matrix_to_csv, matrix_to_json, parse_csv_matrix, parse_json_matrix
from .gapgraph import (
    GapGraph,
    ReachabilitySets,
    SccPartition,
    build_gap_graph,
    check_connected_condition,
    reachability_sets,
    scc_partition,
    to_dot,
)
from .generate import GenConfig, RowSumMode, Splitmix64, generate, generate_with_gap_pattern, shrink_candidates
from .linalg import LinearSolveResult, SolveStatus, det_exact, kernel_basis, solve, spans_same_space
from .matrix import (
    CyclicMatrix,
    IndexSet,
    RationalMatrix,
    RowSumClass,
    RowSumTag,
    all_ones_matrix,
    as_index_set,
    cyclic_distance,
    identity_matrix,
    principal_submatrix,
    row_sum_class,
    validate_class,
    wrap_index,
)
from .pmatrix import (
    KrProfile,
    PMatrixReport,
    check_necessary_condition,
    check_pre_k_gaps,
    check_strong_motzkin,
    check_sufficient_pmatrix,
    check_weakened_row_condition,
    is_p_matrix_exact,
    kr_profile,
    pmatrix_report_json,
    pre_k_gap_indices,
)
from .rational import format_rational, sign, to_rational
from .signanalysis import (
    ClosedSccAnalysis,
    FundamentalSolutionCert,
    KernelVectorCert,
    MSemipositivityWitness,
    SccKind,
    SignCase,
    SignReport,
    SolutionSign,
    SolutionSpace,
    TwoClosedComponentsCert,
    analyze_closed_scc,
    det_sign,
    m_matrix_witness,
    motzkin_row_locator,
    solution_space,
    verify_sign_report,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
