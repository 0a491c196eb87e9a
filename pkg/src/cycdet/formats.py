"""Matrix text formats shared by the library and the CLI.

CSV: one row per line, entries are optional-sign integers, decimals, or
"p/q" fractions.  JSON: {"n": ..., "rows": [[...], ...]} with entries given
as strings or numbers.  JSON floats are intercepted as strings before Python
can round them, so "0.1" in a file always means exactly 1/10.  Output is
always canonical: "p/q", or "p" when the denominator is 1.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import MatrixFormatError
from .matrix import CyclicMatrix, RationalMatrix
from .rational import format_rational, to_rational


def parse_csv_matrix(text: str) -> RationalMatrix:
    rows = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rows.append([to_rational(cell.strip()) for cell in line.split(",")])
        except (ValueError, TypeError) as exc:
            raise MatrixFormatError(f"line {line_no}: {exc}") from exc
    return _to_matrix(rows)


def parse_json_matrix(text: str) -> RationalMatrix:
    try:
        payload = json.loads(text, parse_float=str, parse_int=int)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, dict) or "rows" not in payload:
        raise MatrixFormatError('expected a JSON object with "n" and "rows"')
    raw_rows = payload["rows"]
    if not isinstance(raw_rows, list) or not all(isinstance(r, list) for r in raw_rows):
        raise MatrixFormatError('"rows" must be an array of arrays')
    try:
        rows = [[to_rational(cell) for cell in row] for row in raw_rows]
    except (ValueError, TypeError) as exc:
        raise MatrixFormatError(str(exc)) from exc
    matrix = _to_matrix(rows)
    declared = payload.get("n")
    if declared is not None and declared != matrix.n:
        raise MatrixFormatError(f'"n" is {declared} but the grid is {matrix.n}x{matrix.n}')
    return matrix


def _to_matrix(rows: list[list[Fraction]]) -> RationalMatrix:
    if not rows:
        raise MatrixFormatError("matrix has no rows")
    n = len(rows)
    for i, row in enumerate(rows, start=1):
        if len(row) != n:
            raise MatrixFormatError(f"row {i} has {len(row)} entries, expected {n} (square matrix)")
    return RationalMatrix(n=n, rows=tuple(tuple(r) for r in rows))


def matrix_to_csv(m: RationalMatrix | CyclicMatrix) -> str:
    rows = m.rows
    return "\n".join(",".join(format_rational(x) for x in row) for row in rows) + "\n"


def matrix_to_json(m: RationalMatrix | CyclicMatrix) -> dict:
    rows = m.rows
    return {"n": len(rows), "rows": [[format_rational(x) for x in row] for row in rows]}
