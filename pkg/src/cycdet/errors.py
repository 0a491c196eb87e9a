"""Exception types shared across the package."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    """One broken weak-decrease step: entry at (row, col) is below the next
    cyclic entry at (row, next_col).  Indices are 1-based."""

    row: int
    col: int
    next_col: int

    def __str__(self) -> str:
        return f"row {self.row}: entry in column {self.col} < entry in column {self.next_col}"


class NotInClassError(ValueError):
    """Matrix rows do not weakly decrease cyclically from the diagonal.

    Carries the complete violation list, never just the first hit, so callers
    (and shrinkers) can see the full picture.
    """

    def __init__(self, violations: tuple[Violation, ...]):
        self.violations = violations
        detail = "; ".join(str(v) for v in violations)
        super().__init__(f"matrix rows must weakly decrease cyclically from the diagonal: {detail}")


class MatrixFormatError(ValueError):
    """Input text could not be parsed as a matrix."""


class InternalConsistencyError(RuntimeError):
    """A guaranteed structural invariant failed at runtime.

    These checks encode proven facts about the matrix class; a failure means a
    bug in this package, not bad user input.
    """
