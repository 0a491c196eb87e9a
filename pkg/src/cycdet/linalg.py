"""Exact rational linear algebra: solve, kernel basis, determinant oracle.

Everything here is deliberately boring and deterministic.  Pivots are the
first nonzero entry in column order (exact arithmetic needs no numerical
pivoting), particular solutions set all free variables to zero, and kernel
bases are the RREF free-variable unit vectors, so results can be compared
entry-for-entry in tests.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Union

from .matrix import CyclicMatrix, RationalMatrix

Vector = tuple[Fraction, ...]
MatrixLike = Union[RationalMatrix, CyclicMatrix, Sequence[Sequence[Fraction]]]


class SolveStatus(enum.Enum):
    UNIQUE = "Unique"
    AFFINE = "Affine"
    INFEASIBLE = "Infeasible"


@dataclass(frozen=True)
class LinearSolveResult:
    status: SolveStatus
    particular: Vector | None
    kernel_basis: tuple[Vector, ...]


def _grid(m: MatrixLike) -> list[list[Fraction]]:
    rows = getattr(m, "rows", m)
    return [list(row) for row in rows]


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column indices)."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def solve(m: MatrixLike, b: Sequence[Fraction]) -> LinearSolveResult:
    """Exact Gauss-Jordan solve of m x = b.

    UNIQUE: particular set, kernel empty.  AFFINE: particular (free variables
    zero) plus a canonical kernel basis.  INFEASIBLE: neither.
    """
    grid = _grid(m)
    n_rows = len(grid)
    n_cols = len(grid[0]) if n_rows else 0
    if len(b) != n_rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {n_rows}")
    augmented = [row + [Fraction(x)] for row, x in zip(grid, b)]
    reduced, pivots = _rref(augmented)
    if n_cols in pivots:
        return LinearSolveResult(SolveStatus.INFEASIBLE, None, ())
    particular = [Fraction(0)] * n_cols
    for r, c in enumerate(pivots):
        particular[c] = reduced[r][n_cols]
    basis = _kernel_from_rref(reduced, pivots, n_cols)
    status = SolveStatus.UNIQUE if not basis else SolveStatus.AFFINE
    return LinearSolveResult(status, tuple(particular), basis)


def _kernel_from_rref(
    reduced: list[list[Fraction]], pivots: list[int], n_cols: int
) -> tuple[Vector, ...]:
    free_cols = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free_cols:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -reduced[r][f]
        basis.append(tuple(v))
    return tuple(basis)


def kernel_basis(m: MatrixLike) -> tuple[Vector, ...]:
    """Canonical RREF basis of the null space; empty iff the kernel is trivial."""
    grid = _grid(m)
    if not grid:
        return ()
    reduced, pivots = _rref(grid)
    return _kernel_from_rref(reduced, pivots, len(grid[0]))


def det_exact(m: MatrixLike) -> Fraction:
    """Exact determinant via Bareiss fraction-free elimination.

    Denominators are cleared per row first (determinant is multilinear in the
    rows, so the clearing factor divides back out exactly); all intermediate
    values in the elimination are then integers.
    """
    grid = _grid(m)
    n = len(grid)
    if any(len(row) != n for row in grid):
        raise ValueError("determinant requires a square matrix")
    scale = 1
    work: list[list[int]] = []
    for row in grid:
        lcm = 1
        for x in row:
            d = x.denominator
            lcm = lcm * d // gcd(lcm, d)
        scale *= lcm
        work.append([int(x * lcm) for x in row])

    sign_flips = 1
    prev = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if work[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            work[k], work[swap] = work[swap], work[k]
            sign_flips = -sign_flips
        pivot = work[k][k]
        for i in range(k + 1, n):
            row_i = work[i]
            row_k = work[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign_flips * work[n - 1][n - 1], scale)


def spans_same_space(basis_a: Sequence[Sequence[Fraction]],
                     basis_b: Sequence[Sequence[Fraction]]) -> bool:
    """Subspace equality for two vector lists (bases need not be canonical)."""
    if not basis_a and not basis_b:
        return True
    if bool(basis_a) != bool(basis_b):
        return False
    if len(basis_a[0]) != len(basis_b[0]):
        return False

    def rank(rows: list[list[Fraction]]) -> int:
        return len(_rref(rows)[1])

    a_rows = [list(v) for v in basis_a]
    b_rows = [list(v) for v in basis_b]
    rank_a = rank([row[:] for row in a_rows])
    rank_b = rank([row[:] for row in b_rows])
    return rank_a == rank_b == rank([row[:] for row in a_rows + b_rows])


def mat_vec(m: MatrixLike, v: Sequence[Fraction]) -> Vector:
    grid = getattr(m, "rows", m)
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in grid)


def transpose(m: MatrixLike) -> tuple[tuple[Fraction, ...], ...]:
    grid = getattr(m, "rows", m)
    return tuple(zip(*grid))
