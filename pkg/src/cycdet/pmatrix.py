"""P-matrix tests for class members.

A P-matrix has every principal minor strictly positive.  The exact test
enumerates principal index sets (ascending cardinality, then lexicographic,
so reported witnesses are smallest-first) and reads each minor's sign off the
closed-SCC analysis of the principal submatrix, which stays inside the class.
The cheaper one-pass conditions bracket the exact answer:

  sufficient:  entries >= 0, positive row sums, and some column k whose
               entry every other row's diagonal strictly dominates;
  necessary (for non-negative members with positive row sums): wherever the
               diagonal value extends along the row, the rows it extends over
               must strictly dominate their entry in the starting column.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .linalg import det_exact
from .matrix import CyclicMatrix, IndexSet, principal_submatrix, row_sum_class, wrap_index
from .rational import sign
from . import signanalysis

MAX_EXACT_DIMENSION = 12  # 2^12 - 1 principal minors; refuse anything bigger


@dataclass(frozen=True)
class PMatrixReport:
    is_p_matrix: bool
    witness: IndexSet | None  # first principal index set (canonical order) with minor <= 0
    minors_checked: int


@dataclass(frozen=True)
class KrProfile:
    """Per row r: how far the diagonal value extends cyclically (k_r), and the
    principal index set {r, [r+1], ..., [r+k_r]} it spans, stored ascending."""

    k: tuple[int, ...]
    index_sets: tuple[IndexSet, ...]


def check_pre_k_gaps(a: CyclicMatrix) -> int | None:
    """Smallest column k such that a_rr > a_rk for every row r != k, or None."""
    valid = pre_k_gap_indices(a)
    return valid[0] if valid else None


def pre_k_gap_indices(a: CyclicMatrix) -> tuple[int, ...]:
    """All columns k that every other row's diagonal strictly dominates."""
    n = a.n
    out = []
    for k in range(1, n + 1):
        if all(a.entry(r, r) > a.entry(r, k) for r in range(1, n + 1) if r != k):
            out.append(k)
    return tuple(out)


def check_strong_motzkin(a: CyclicMatrix) -> bool:
    """True iff every diagonal entry strictly exceeds its cyclic successor
    (the remaining weak inequalities hold by class membership)."""
    n = a.n
    return all(a.entry(i, i) > a.entry(i, wrap_index(i + 1, n)) for i in range(1, n + 1))


def kr_profile(a: CyclicMatrix) -> KrProfile:
    n = a.n
    ks = []
    sets = []
    for r in range(1, n + 1):
        diag = a.entry(r, r)
        k = 0
        while k + 1 <= n - 1 and a.entry(r, wrap_index(r + k + 1, n)) == diag:
            k += 1
        ks.append(k)
        sets.append(tuple(sorted(wrap_index(r + t, n) for t in range(k + 1))))
    return KrProfile(k=tuple(ks), index_sets=tuple(sets))


def check_necessary_condition(a: CyclicMatrix) -> bool:
    """For every row r whose diagonal value extends k_r > 0 steps, each row s
    in the extension must satisfy a_ss > a_sr."""
    n = a.n
    profile = kr_profile(a)
    for r in range(1, n + 1):
        k = profile.k[r - 1]
        if k == 0:
            continue
        for t in range(1, k + 1):
            s = wrap_index(r + t, n)
            if not a.entry(s, s) > a.entry(s, r):
                return False
    return True


def check_weakened_row_condition(a: CyclicMatrix) -> bool:
    """True iff on every row, diagonal plus all negative entries sums > 0."""
    for r in range(1, a.n + 1):
        row = a.rows[r - 1]
        total = row[r - 1] + sum((x for x in row if x < 0), Fraction(0))
        if not total > 0:
            return False
    return True


def check_sufficient_pmatrix(a: CyclicMatrix) -> bool:
    nonneg = all(x >= 0 for row in a.rows for x in row)
    positive_sums = all(s > 0 for s in row_sum_class(a).sums)
    return nonneg and positive_sums and check_pre_k_gaps(a) is not None


def is_p_matrix_exact(a: CyclicMatrix) -> PMatrixReport:
    """Exact P-matrix decision with a smallest-first witness.

    Minor signs come from the closed-SCC analysis of each principal
    submatrix; debug builds spot-verify every one against the determinant
    oracle.  Enumeration stops at the first non-positive minor.
    """
    n = a.n
    if n > MAX_EXACT_DIMENSION:
        raise ValueError(
            f"exact P-matrix test enumerates 2^n - 1 minors and is capped at "
            f"n <= {MAX_EXACT_DIMENSION}; got n = {n}"
        )
    checked = 0
    for size in range(1, n + 1):
        for subset in combinations(range(1, n + 1), size):
            sub = principal_submatrix(a, subset)
            minor_sign = signanalysis.det_sign(sub).sign
            assert minor_sign == sign(det_exact(sub.inner)), subset
            checked += 1
            if minor_sign <= 0:
                return PMatrixReport(is_p_matrix=False, witness=subset, minors_checked=checked)
    return PMatrixReport(is_p_matrix=True, witness=None, minors_checked=checked)


def pmatrix_report_json(a: CyclicMatrix) -> dict:
    """The full battery in one JSON-ready object.

    The necessary condition is backed by theory only for non-negative members
    with positive row sums; outside that regime it is still reported, as
    information without implication.
    """
    report = is_p_matrix_exact(a)
    return {
        "is_p_matrix": report.is_p_matrix,
        "witness": list(report.witness) if report.witness is not None else None,
        "minors_checked": report.minors_checked,
        "sufficient_condition": check_sufficient_pmatrix(a),
        "necessary_condition": check_necessary_condition(a),
        "strong_motzkin": check_strong_motzkin(a),
    }
