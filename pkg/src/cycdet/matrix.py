"""Matrix containers, cyclic index arithmetic, and class validation.

The matrix class of interest: square matrices whose every row weakly
decreases in the cyclic column order starting at the diagonal,

    a[i][i] >= a[i][i+1] >= ... >= a[i][n] >= a[i][1] >= ... >= a[i][i-1].

The diagonal entry is therefore always a weak maximum of its row.  All public
indices are 1-based; internal storage is 0-based tuples and never leaks.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InternalConsistencyError, NotInClassError, Violation
from .rational import RationalLike, to_rational

IndexSet = tuple[int, ...]


def wrap_index(i: int, n: int) -> int:
    """The unique index r in {1,...,n} with i congruent to r mod n."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    return (i - 1) % n + 1


def cyclic_distance(i: int, j: int, n: int) -> int:
    """Steps forward in cyclic order on {1,...,n} from i to j; in {0,...,n-1}."""
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    if not 1 <= j <= n:
        raise ValueError(f"index {j} out of range 1..{n}")
    return (j - i) % n


def as_index_set(indices: Iterable[int], n: int) -> IndexSet:
    """Normalize to a sorted, duplicate-free tuple and bounds-check against n."""
    out = tuple(sorted(set(indices)))
    for i in out:
        if not isinstance(i, int) or isinstance(i, bool):
            raise ValueError(f"index {i!r} is not an integer")
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range 1..{n}")
    return out


@dataclass(frozen=True)
class RationalMatrix:
    """A plain n x n grid of exact rationals (pre-validation container)."""

    n: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"dimension must be >= 1, got {self.n}")
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise ValueError(f"expected a {self.n}x{self.n} grid")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> "RationalMatrix":
        converted = tuple(tuple(to_rational(x) for x in row) for row in rows)
        return cls(n=len(converted), rows=converted)

    def entry(self, i: int, j: int) -> Fraction:
        """1-based access: entry in row i, column j."""
        return self.rows[i - 1][j - 1]


@dataclass(frozen=True)
class CyclicMatrix:
    """A RationalMatrix proven to have cyclically weakly decreasing rows.

    Construct through :func:`validate_class` or :meth:`from_rows`; direct
    construction bypasses validation and is reserved for call sites that
    already hold a proof (see :func:`principal_submatrix`).
    """

    inner: RationalMatrix

    @property
    def n(self) -> int:
        return self.inner.n

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self.inner.rows

    def entry(self, i: int, j: int) -> Fraction:
        return self.inner.entry(i, j)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> "CyclicMatrix":
        return validate_class(RationalMatrix.from_rows(rows))


class RowSumTag(enum.Enum):
    ALL_POSITIVE = "AllPositive"
    ALL_NEGATIVE = "AllNegative"
    MIXED = "Mixed"


@dataclass(frozen=True)
class RowSumClass:
    """The n exact row sums plus their sign classification.

    MIXED covers everything that is neither all-strictly-positive nor
    all-strictly-negative, including any zero sum.
    """

    tag: RowSumTag
    sums: tuple[Fraction, ...]


def find_violations(m: RationalMatrix) -> tuple[Violation, ...]:
    """Every broken step of the cyclic weak decrease, in row-major scan order."""
    violations: list[Violation] = []
    n = m.n
    for i in range(1, n + 1):
        row = m.rows[i - 1]
        for k in range(n - 1):
            col = wrap_index(i + k, n)
            nxt = wrap_index(i + k + 1, n)
            if row[col - 1] < row[nxt - 1]:
                violations.append(Violation(row=i, col=col, next_col=nxt))
    return tuple(violations)


def validate_class(m: RationalMatrix) -> CyclicMatrix:
    """Prove class membership, or raise NotInClassError listing every violation."""
    violations = find_violations(m)
    if violations:
        raise NotInClassError(violations)
    return CyclicMatrix(inner=m)


def row_sum_class(a: CyclicMatrix) -> RowSumClass:
    sums = tuple(sum(row, Fraction(0)) for row in a.rows)
    if all(s > 0 for s in sums):
        tag = RowSumTag.ALL_POSITIVE
    elif all(s < 0 for s in sums):
        tag = RowSumTag.ALL_NEGATIVE
    else:
        tag = RowSumTag.MIXED
    return RowSumClass(tag=tag, sums=sums)


def principal_submatrix(a: CyclicMatrix, keep: Iterable[int]) -> CyclicMatrix:
    """Restrict rows and columns to `keep` (ascending).

    Deleting a row/column pair preserves the cyclic weak decrease of each
    remaining row, so the result is wrapped after an assertion-style check
    rather than a user-facing validation.
    """
    kept = as_index_set(keep, a.n)
    if not kept:
        raise ValueError("keep must be a non-empty index set")
    rows = tuple(tuple(a.rows[i - 1][j - 1] for j in kept) for i in kept)
    sub = RationalMatrix(n=len(kept), rows=rows)
    if find_violations(sub):
        raise InternalConsistencyError(
            f"principal submatrix on {kept} left the matrix class; this cannot happen"
        )
    return CyclicMatrix(inner=sub)


def all_ones_matrix(n: int) -> CyclicMatrix:
    """The n x n matrix of all ones (constant rows, so no gaps at all)."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    one = Fraction(1)
    return CyclicMatrix(inner=RationalMatrix(n=n, rows=tuple((one,) * n for _ in range(n))))


def identity_matrix(n: int) -> CyclicMatrix:
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    zero, one = Fraction(0), Fraction(1)
    rows = tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
    return CyclicMatrix(inner=RationalMatrix(n=n, rows=rows))
