"""Deterministic generation of class members for property tests and benchmarks.

The pseudo-random source is SplitMix64, a counter-based generator: the
mapping from (seed, stream) to output is fixed by this module alone, never by
the platform or Python version, and streams split off a seed are independent
enough for parallel test shards.  The seed-to-matrix mapping is stable within
a release.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalConsistencyError
from .gapgraph import build_gap_graph
from .matrix import CyclicMatrix, RationalMatrix, principal_submatrix, validate_class, wrap_index

_MASK64 = (1 << 64) - 1


class Splitmix64:
    """SplitMix64 stream; `stream` selects an independent substream."""

    def __init__(self, seed: int, stream: int = 0):
        self._state = (seed ^ (0x9E3779B97F4A7C15 * (stream + 1))) & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi] (modulo bias is irrelevant at these ranges)."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.next_u64() % (hi - lo + 1)


class RowSumMode(enum.Enum):
    ANY = "any"
    FORCE_POSITIVE = "pos"
    FORCE_NEGATIVE = "neg"


@dataclass(frozen=True)
class GenConfig:
    n: int
    entry_bound: int = 5
    non_negative: bool = False
    row_sum: RowSumMode = RowSumMode.ANY
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"dimension must be >= 1, got {self.n}")
        if self.entry_bound < 1:
            raise ValueError(f"entry bound must be >= 1, got {self.entry_bound}")
        if self.non_negative and self.row_sum is RowSumMode.FORCE_NEGATIVE:
            raise ValueError("non-negative entries cannot have all-negative row sums")


def _shift_to_row_sum(rows: list[list[Fraction]], mode: RowSumMode) -> list[list[Fraction]]:
    """Add a uniform constant to every entry until the row sums have the
    requested strict sign.  A constant shift changes no entry differences, so
    class membership and the gap pattern are untouched."""
    n = len(rows)
    sums = [sum(row, Fraction(0)) for row in rows]
    if mode is RowSumMode.FORCE_POSITIVE:
        worst = min(sums)
        if worst > 0:
            return rows
        shift = Fraction((-worst) // n + 1)
    elif mode is RowSumMode.FORCE_NEGATIVE:
        worst = max(sums)
        if worst < 0:
            return rows
        shift = -Fraction(worst // n + 1)
    else:
        return rows
    return [[x + shift for x in row] for row in rows]


def generate(config: GenConfig) -> CyclicMatrix:
    """Draw a class member: each row is n integer draws sorted weakly
    decreasing along the cyclic order from the diagonal."""
    rng = Splitmix64(config.seed)
    n = config.n
    lo = 0 if config.non_negative else -config.entry_bound
    rows: list[list[Fraction]] = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        draws = sorted((rng.randint(lo, config.entry_bound) for _ in range(n)), reverse=True)
        for k, value in enumerate(draws):
            rows[i][wrap_index(i + 1 + k, n) - 1] = Fraction(value)
    rows = _shift_to_row_sum(rows, config.row_sum)
    return validate_class(RationalMatrix(n=n, rows=tuple(tuple(r) for r in rows)))


def generate_with_gap_pattern(
    k_target: tuple[tuple[int, ...], ...], config: GenConfig
) -> CyclicMatrix:
    """Realize an exact gap pattern: walking each row cyclically from the
    diagonal, the value drops by a positive draw precisely at the positions
    the pattern marks, and holds everywhere else."""
    n = len(k_target)
    if n != config.n:
        raise ValueError(f"pattern is {n}x{n} but config.n = {config.n}")
    if any(len(row) != n for row in k_target):
        raise ValueError("pattern must be square")
    for i in range(n):
        if k_target[i][i] != 0:
            raise ValueError(f"pattern has a self-loop at vertex {i + 1}; gaps "
                             "right before the diagonal are impossible in this class")
        if any(v not in (0, 1) for v in k_target[i]):
            raise ValueError("pattern entries must be 0 or 1")
    rng = Splitmix64(config.seed, stream=1)
    rows: list[list[Fraction]] = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        drops = [
            rng.randint(1, config.entry_bound) if k_target[i][wrap_index(i + 1 + k, n) - 1] else 0
            for k in range(1, n)
        ]
        lowest = 0 if config.non_negative else rng.randint(-config.entry_bound, config.entry_bound)
        value = lowest + sum(drops)
        rows[i][i] = Fraction(value)
        for k in range(1, n):
            value -= drops[k - 1]
            rows[i][wrap_index(i + 1 + k, n) - 1] = Fraction(value)
    rows = _shift_to_row_sum(rows, config.row_sum)
    result = validate_class(RationalMatrix(n=n, rows=tuple(tuple(r) for r in rows)))
    if build_gap_graph(result).kappa != tuple(tuple(row) for row in k_target):
        raise InternalConsistencyError("generated matrix does not reproduce the requested gap pattern")
    return result


def shrink_candidates(a: CyclicMatrix) -> list[CyclicMatrix]:
    """Smaller candidates for a failing matrix, all re-validated: every
    one-index-removed principal submatrix, then the entrywise truncation
    toward zero (truncation is monotone, so it usually stays in class)."""
    candidates: list[CyclicMatrix] = []
    if a.n > 1:
        for drop in range(1, a.n + 1):
            keep = tuple(i for i in range(1, a.n + 1) if i != drop)
            candidates.append(principal_submatrix(a, keep))
    truncated = tuple(
        tuple(Fraction(int(x)) for x in row) for row in a.rows
    )
    if truncated != a.rows:
        try:
            candidates.append(validate_class(RationalMatrix(n=a.n, rows=truncated)))
        except ValueError:
            pass
    return candidates
