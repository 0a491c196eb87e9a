"""Sign of the determinant, certified without evaluating the determinant.

For a class member the solutions of Aᵀx = λe live on the closed SCCs of the
gap graph.  Each closed SCC C either admits a unique solution of the
restricted system [A]ᵀ_CC ξ = e_C (then C is *fundamental*, the zero-extended
solution solves the full system and is strictly one-signed on C), or the
restricted system is unsolvable (then C is *null* and the kernel of [A]ᵀ_CC
zero-extends into ker Aᵀ).  The determinant sign follows:

  - two or more closed SCCs, or a single null one: det A = 0,
  - a single fundamental SCC with x >= 0: det A > 0; with x <= 0: det A < 0.

Every report carries a certificate that re-verifies by exact arithmetic
alone: two disjoint closed components, a kernel vector of Aᵀ, or the
one-signed solution of Aᵀx = e.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import InternalConsistencyError
from .gapgraph import SccPartition, build_gap_graph, scc_partition
from .linalg import SolveStatus, Vector, kernel_basis, mat_vec, solve, transpose
from .matrix import (
    CyclicMatrix,
    IndexSet,
    RationalMatrix,
    RowSumTag,
    as_index_set,
    principal_submatrix,
    row_sum_class,
    wrap_index,
)
from .rational import RationalLike, format_rational, to_rational


class SccKind(enum.Enum):
    FUNDAMENTAL = "Fundamental"
    NULL = "Null"


class SolutionSign(enum.Enum):
    NON_NEGATIVE = "NonNegative"
    NON_POSITIVE = "NonPositive"


class SignCase(enum.Enum):
    TWO_OR_MORE_CLOSED = "TwoOrMoreClosed"
    ONE_CLOSED_NULL = "OneClosedNull"
    ONE_CLOSED_POSITIVE = "OneClosedPositive"
    ONE_CLOSED_NEGATIVE = "OneClosedNegative"


@dataclass(frozen=True)
class ClosedSccAnalysis:
    """Outcome of the restricted system on one closed SCC.

    Fundamental: fundamental_solution is the full-length zero-extended
    solution, strictly one-signed on the component.  Null: null_basis is the
    zero-extended canonical kernel basis of the restricted transpose, every
    vector of which lies in ker Aᵀ.
    """

    component: IndexSet
    kind: SccKind
    fundamental_solution: Vector | None = None
    sign: SolutionSign | None = None
    null_basis: tuple[Vector, ...] = ()


@dataclass(frozen=True)
class SolutionSpace:
    """All solutions of Aᵀx = λe: sums of fundamental solutions weighted by
    coefficients adding to λ, plus arbitrary null vectors per null SCC."""

    lam: Fraction
    fundamental: tuple[ClosedSccAnalysis, ...]
    null: tuple[ClosedSccAnalysis, ...]
    canonical_particular: Vector | None
    feasible: bool


@dataclass(frozen=True)
class TwoClosedComponentsCert:
    components: tuple[IndexSet, IndexSet]


@dataclass(frozen=True)
class KernelVectorCert:
    vector: Vector


@dataclass(frozen=True)
class FundamentalSolutionCert:
    vector: Vector


SignCertificate = Union[TwoClosedComponentsCert, KernelVectorCert, FundamentalSolutionCert]


@dataclass(frozen=True)
class SignReport:
    case: SignCase
    sign: int
    certificate: SignCertificate


@dataclass(frozen=True)
class MSemipositivityWitness:
    """Constructive proof that the open vertices carry no solution mass.

    m_matrix is the full difference matrix m_ij = a_ij - a_i[j-1]; on the open
    union D its principal block is a Z-matrix with positive diagonal, and z
    (aligned with ascending D, built along `ordering`) satisfies 0 < z < 1 and
    [M]_DD z > 0 componentwise, making [M]_DD a nonsingular M-matrix.
    """

    m_matrix: RationalMatrix
    open_union: IndexSet
    ordering: tuple[int, ...]
    z: Vector


def _zero_extend(values: Vector, component: IndexSet, n: int) -> Vector:
    full = [Fraction(0)] * n
    for value, i in zip(values, component):
        full[i - 1] = value
    return tuple(full)


def _analyze_component(a: CyclicMatrix, component: IndexSet) -> ClosedSccAnalysis:
    sub = principal_submatrix(a, component)
    ones = (Fraction(1),) * sub.n
    result = solve(transpose(sub), ones)
    if result.status is SolveStatus.INFEASIBLE:
        basis = kernel_basis(transpose(sub))
        if not basis:
            raise InternalConsistencyError(
                "unsolvable square restricted system must have a nontrivial kernel"
            )
        return ClosedSccAnalysis(
            component=component,
            kind=SccKind.NULL,
            null_basis=tuple(_zero_extend(v, component, a.n) for v in basis),
        )
    if result.status is not SolveStatus.UNIQUE:
        raise InternalConsistencyError(
            f"restricted system on closed SCC {component} has multiple solutions; "
            "solutions on a single strongly connected class are unique"
        )
    xi = result.particular
    assert xi is not None
    if all(v > 0 for v in xi):
        sgn = SolutionSign.NON_NEGATIVE
    elif all(v < 0 for v in xi):
        sgn = SolutionSign.NON_POSITIVE
    else:
        raise InternalConsistencyError(
            f"solution on closed SCC {component} is not strictly one-signed: {xi}"
        )
    return ClosedSccAnalysis(
        component=component,
        kind=SccKind.FUNDAMENTAL,
        fundamental_solution=_zero_extend(xi, component, a.n),
        sign=sgn,
    )


def analyze_closed_scc(a: CyclicMatrix, c: IndexSet | list[int] | set[int]) -> ClosedSccAnalysis:
    """Classify one closed SCC as fundamental or null.

    Rejects any index set that is not a closed SCC of the gap graph; open
    components carry no solution mass and must not be analyzed.
    """
    component = as_index_set(c, a.n)
    partition = scc_partition(build_gap_graph(a))
    if component not in partition.closed_components:
        raise ValueError(f"{component} is not a closed SCC of the gap graph")
    return _analyze_component(a, component)


def _analyses(a: CyclicMatrix, partition: SccPartition) -> list[ClosedSccAnalysis]:
    return [_analyze_component(a, c) for c in partition.closed_components]


def solution_space(a: CyclicMatrix, lam: RationalLike) -> SolutionSpace:
    """Describe every solution of Aᵀx = λe.

    Feasible iff at least one closed SCC is fundamental or λ = 0.  The
    canonical particular solution puts the whole coefficient λ on the first
    fundamental component (components ordered by smallest member) and takes
    no null contribution.
    """
    lam = to_rational(lam)
    partition = scc_partition(build_gap_graph(a))
    analyses = _analyses(a, partition)
    fundamental = tuple(x for x in analyses if x.kind is SccKind.FUNDAMENTAL)
    null = tuple(x for x in analyses if x.kind is SccKind.NULL)
    if fundamental:
        first = fundamental[0].fundamental_solution
        assert first is not None
        particular: Vector | None = tuple(lam * v for v in first)
    elif lam == 0:
        particular = (Fraction(0),) * a.n
    else:
        particular = None
    return SolutionSpace(
        lam=lam,
        fundamental=fundamental,
        null=null,
        canonical_particular=particular,
        feasible=bool(fundamental) or lam == 0,
    )


def det_sign(a: CyclicMatrix) -> SignReport:
    """Certified determinant sign from the closed-SCC structure alone.

    Strictly one-signed row sums already pin the answer (they rule out the
    null and opposite-sign cases); the certificate is computed regardless so
    every report re-verifies independently.
    """
    partition = scc_partition(build_gap_graph(a))
    closed = partition.closed_components
    if len(closed) >= 2:
        report = SignReport(
            case=SignCase.TWO_OR_MORE_CLOSED,
            sign=0,
            certificate=TwoClosedComponentsCert(components=(closed[0], closed[1])),
        )
    else:
        analysis = _analyze_component(a, closed[0])
        if analysis.kind is SccKind.NULL:
            report = SignReport(
                case=SignCase.ONE_CLOSED_NULL,
                sign=0,
                certificate=KernelVectorCert(vector=analysis.null_basis[0]),
            )
        elif analysis.sign is SolutionSign.NON_NEGATIVE:
            assert analysis.fundamental_solution is not None
            report = SignReport(
                case=SignCase.ONE_CLOSED_POSITIVE,
                sign=1,
                certificate=FundamentalSolutionCert(vector=analysis.fundamental_solution),
            )
        else:
            assert analysis.fundamental_solution is not None
            report = SignReport(
                case=SignCase.ONE_CLOSED_NEGATIVE,
                sign=-1,
                certificate=FundamentalSolutionCert(vector=analysis.fundamental_solution),
            )
    tag = row_sum_class(a).tag
    if tag is RowSumTag.ALL_POSITIVE and len(closed) == 1 and report.sign != 1:
        raise InternalConsistencyError("positive row sums with one closed SCC force sign +1")
    if tag is RowSumTag.ALL_NEGATIVE and len(closed) == 1 and report.sign != -1:
        raise InternalConsistencyError("negative row sums with one closed SCC force sign -1")
    return report


def verify_sign_report(a: CyclicMatrix, report: SignReport) -> bool:
    """Re-check a report's certificate using exact arithmetic only."""
    cert = report.certificate
    if isinstance(cert, TwoClosedComponentsCert):
        first, second = cert.components
        if set(first) & set(second):
            return False
        closed = scc_partition(build_gap_graph(a)).closed_components
        return report.sign == 0 and first in closed and second in closed
    at_x = mat_vec(transpose(a.inner), cert.vector)
    if isinstance(cert, KernelVectorCert):
        return (
            report.sign == 0
            and any(v != 0 for v in cert.vector)
            and all(v == 0 for v in at_x)
        )
    ones = (Fraction(1),) * a.n
    if at_x != ones:
        return False
    if report.sign == 1:
        return all(v >= 0 for v in cert.vector)
    return report.sign == -1 and all(v <= 0 for v in cert.vector)


def _difference_matrix(a: CyclicMatrix) -> RationalMatrix:
    n = a.n
    rows = tuple(
        tuple(a.rows[i][j] - a.rows[i][j - 1] for j in range(n)) for i in range(n)
    )
    return RationalMatrix(n=n, rows=rows)


def m_matrix_witness(a: CyclicMatrix) -> MSemipositivityWitness | None:
    """Build the semi-positivity witness for the open-vertex block, or None
    when every vertex lies in a closed SCC.

    The ordering enters the open union one vertex at a time, always picking
    the smallest vertex with an edge into the closed union or an already
    chosen vertex; such a vertex exists at every step, else the remainder
    would contain a closed SCC.  The recursion for z then keeps every partial
    weighted row sum strictly between 0 and twice the diagonal, forcing
    0 < z < 1 and [M]_DD z > 0.
    """
    graph = build_gap_graph(a)
    partition = scc_partition(graph)
    open_union = partition.open_union
    if not open_union:
        return None
    m = _difference_matrix(a)

    reachable = set(partition.closed_union)
    remaining = set(open_union)
    ordering: list[int] = []
    while remaining:
        pick = next(
            (v for v in sorted(remaining) if any(w in reachable for w in graph.out_edges[v - 1])),
            None,
        )
        if pick is None:
            raise InternalConsistencyError(
                "open vertices with no edge out of the remainder would form a closed SCC"
            )
        ordering.append(pick)
        reachable.add(pick)
        remaining.remove(pick)

    d = len(ordering)
    z_by_vertex: dict[int, Fraction] = {}
    for k in range(d):
        ik = ordering[k]
        diag = m.entry(ik, ik)
        if diag <= 0:
            raise InternalConsistencyError(f"open-vertex diagonal m[{ik}][{ik}] must be positive")
        head = sum((m.entry(ik, ordering[l]) * z_by_vertex[ordering[l]] for l in range(k)), Fraction(0))
        tail = sum((m.entry(ik, ordering[l]) for l in range(k, d)), Fraction(0))
        z_by_vertex[ik] = 1 - (head + tail) / (2 * diag)

    z = tuple(z_by_vertex[v] for v in open_union)
    _check_witness(a, m, open_union, z)
    return MSemipositivityWitness(
        m_matrix=m, open_union=open_union, ordering=tuple(ordering), z=z
    )


def _check_witness(
    a: CyclicMatrix, m: RationalMatrix, open_union: IndexSet, z: Vector
) -> None:
    n = a.n
    for i in range(1, n + 1):
        if sum((m.entry(i, j) for j in range(1, n + 1)), Fraction(0)) != 0:
            raise InternalConsistencyError("difference matrix rows must sum to zero")
    for i in open_union:
        for j in open_union:
            if i != j and m.entry(i, j) > 0:
                raise InternalConsistencyError("off-diagonal of the open block must be <= 0")
    if not all(0 < v < 1 for v in z):
        raise InternalConsistencyError("witness vector must lie strictly between 0 and 1")
    for i in open_union:
        image = sum((m.entry(i, j) * zj for j, zj in zip(open_union, z)), Fraction(0))
        if image <= 0:
            raise InternalConsistencyError("open block applied to witness must be positive")


def motzkin_row_locator(a: CyclicMatrix, z: Vector) -> int:
    """Locate a row where Az is strictly negative (positive row sums) or
    strictly positive (negative row sums), given a direction z with eᵀz < 0.

    The row right after the index maximizing (resp. minimizing) the running
    centered partial sums of z works; the strict sign is re-checked exactly.
    """
    n = a.n
    if len(z) != n:
        raise ValueError(f"z has length {len(z)}, expected {n}")
    tag = row_sum_class(a).tag
    if tag is RowSumTag.MIXED:
        raise ValueError("row sums must be all positive or all negative")
    total = sum(z, Fraction(0))
    if total >= 0:
        raise ValueError("z must satisfy e^T z < 0")
    mean = Fraction(total, n)
    partials = []
    acc = Fraction(0)
    for value in z:
        acc += value - mean
        partials.append(acc)
    if tag is RowSumTag.ALL_POSITIVE:
        best = max(partials)
        want_negative = True
    else:
        best = min(partials)
        want_negative = False
    r = partials.index(best) + 1  # smallest index attaining the extreme
    r_prime = wrap_index(r + 1, n)
    image = sum((a.rows[r_prime - 1][j] * z[j] for j in range(n)), Fraction(0))
    if want_negative and image >= 0:
        raise InternalConsistencyError(f"(Az)_{r_prime} = {image} is not strictly negative")
    if not want_negative and image <= 0:
        raise InternalConsistencyError(f"(Az)_{r_prime} = {image} is not strictly positive")
    return r_prime


def _vector_json(v: Vector) -> list[str]:
    return [format_rational(x) for x in v]


def sign_report_to_json(report: SignReport) -> dict:
    cert = report.certificate
    if isinstance(cert, TwoClosedComponentsCert):
        payload = {
            "kind": "two_closed_components",
            "components": [list(c) for c in cert.components],
        }
    elif isinstance(cert, KernelVectorCert):
        payload = {"kind": "kernel_vector", "vector": _vector_json(cert.vector)}
    else:
        payload = {"kind": "fundamental_solution", "vector": _vector_json(cert.vector)}
    return {"sign": report.sign, "case": report.case.value, "certificate": payload}


def solution_space_to_json(space: SolutionSpace) -> dict:
    return {
        "lambda": format_rational(space.lam),
        "feasible": space.feasible,
        "fundamental": [
            {
                "component": list(x.component),
                "x": _vector_json(x.fundamental_solution or ()),
                "sign": x.sign.value if x.sign else None,
            }
            for x in space.fundamental
        ],
        "null": [
            {
                "component": list(x.component),
                "basis": [_vector_json(v) for v in x.null_basis],
            }
            for x in space.null
        ],
        "canonical_particular": (
            _vector_json(space.canonical_particular)
            if space.canonical_particular is not None
            else None
        ),
    }


def witness_to_json(witness: MSemipositivityWitness | None) -> dict:
    if witness is None:
        return {"applicable": False}
    return {
        "applicable": True,
        "open_union": list(witness.open_union),
        "ordering": list(witness.ordering),
        "z": _vector_json(witness.z),
        "m_matrix": [[format_rational(x) for x in row] for row in witness.m_matrix.rows],
    }
