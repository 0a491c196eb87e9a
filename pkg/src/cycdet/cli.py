"""Command-line front door.

Sub-commands:

    analyze --input PATH --format csv|json --ops OP[,OP...] [--lambda Q]
            [--root INDEX] --out text|json [--dot PATH]
    gen     --n INT [--bound INT] [--non-negative] [--row-sum any|pos|neg]
            [--seed U64] [--gap-pattern PATH] [--format csv|json]
    oracle  --input PATH [--format csv|json]

Reports go to stdout, diagnostics to stderr.  Exit codes: 0 success, 2 matrix
not in class, 3 parse/IO error, 4 invalid flags, 5 determinant-sign oracle
mismatch (the soundness alarm; unreachable unless this package is wrong).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, Sequence

from .errors import MatrixFormatError, NotInClassError
from .formats import matrix_to_csv, matrix_to_json, parse_csv_matrix, parse_json_matrix
from .gapgraph import (
    build_gap_graph,
    graph_to_json,
    partition_to_json,
    reachability_sets,
    scc_partition,
    to_dot,
)
from .generate import GenConfig, RowSumMode, generate, generate_with_gap_pattern
from .linalg import det_exact
from .matrix import CyclicMatrix, RationalMatrix, validate_class
from .pmatrix import pmatrix_report_json
from .rational import format_rational, sign, to_rational
from .signanalysis import (
    SignReport,
    det_sign,
    m_matrix_witness,
    sign_report_to_json,
    solution_space,
    solution_space_to_json,
    witness_to_json,
)

EXIT_OK = 0
EXIT_NOT_IN_CLASS = 2
EXIT_PARSE = 3
EXIT_USAGE = 4
EXIT_ORACLE_MISMATCH = 5

OPS = ("class", "graph", "scc", "sign", "solutions", "pmatrix", "witness", "reach", "oracle")

# Test hook: when set, the oracle comparison reads the analysis sign through
# this callable instead of the report.  Lets the soundness alarm (exit 5) be
# exercised without shipping a broken analysis.
_analysis_sign_hook: Callable[[SignReport], int] | None = None


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would sys.exit(2); we want exit 4
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="cycdet", description=__doc__, add_help=True)
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="run analyses on a matrix file")
    analyze.add_argument("--input", required=True, help="matrix file, or - for stdin")
    analyze.add_argument("--format", choices=("csv", "json"), default="csv")
    analyze.add_argument("--ops", required=True, help="comma-separated: " + ",".join(OPS))
    analyze.add_argument("--lambda", dest="lam", default="1",
                         help="right-hand-side multiple for the solutions op (exact: p/q, int, decimal)")
    analyze.add_argument("--root", type=int, default=1, help="root row for the reach op")
    analyze.add_argument("--out", choices=("text", "json"), default="text")
    analyze.add_argument("--dot", help="also write the gap graph in DOT format to this path")

    gen = sub.add_parser("gen", help="generate a class member")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--bound", type=int, default=5)
    gen.add_argument("--non-negative", action="store_true")
    gen.add_argument("--row-sum", choices=("any", "pos", "neg"), default="any")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--gap-pattern", help="0-1 matrix file; output reproduces it exactly")
    gen.add_argument("--format", choices=("csv", "json"), default="csv")

    oracle = sub.add_parser("oracle", help="cross-check certified sign against the exact determinant")
    oracle.add_argument("--input", required=True, help="matrix file, or - for stdin")
    oracle.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser


def _read_matrix(path: str, fmt: str) -> RationalMatrix:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    return parse_csv_matrix(text) if fmt == "csv" else parse_json_matrix(text)


def _oracle_json(a: CyclicMatrix) -> dict:
    report = det_sign(a)
    analysis_sign = _analysis_sign_hook(report) if _analysis_sign_hook else report.sign
    det = det_exact(a.inner)
    return {
        "determinant": format_rational(det),
        "oracle_sign": sign(det),
        "analysis_sign": analysis_sign,
        "consistent": sign(det) == analysis_sign,
    }


def _format_components(pieces: Sequence[tuple[tuple[int, ...], bool]]) -> str:
    return "; ".join(
        "{" + ",".join(str(v) for v in c) + "}" + (" closed" if closed else " open")
        for c, closed in pieces
    )


def _render_text(report: dict) -> str:
    lines = []
    for op, data in report.items():
        if op == "class":
            lines.append("class: OK")
        elif op == "graph":
            lines.append("graph: kappa =")
            for row in data["kappa"]:
                lines.append("  " + " ".join(str(v) for v in row))
        elif op == "scc":
            pieces = [(tuple(c["vertices"]), c["closed"]) for c in data["components"]]
            lines.append("scc: " + _format_components(pieces))
        elif op == "sign":
            lines.append(f"sign: {data['sign']:+d} ({data['case']})".replace("+0", "0"))
            cert = data["certificate"]
            if cert["kind"] == "two_closed_components":
                parts = ", ".join("{" + ",".join(map(str, c)) + "}" for c in cert["components"])
                lines.append(f"  certificate: disjoint closed components {parts}")
            else:
                lines.append(f"  certificate: {cert['kind']} ({', '.join(cert['vector'])})")
        elif op == "solutions":
            lines.append(
                f"solutions: lambda={data['lambda']} "
                f"{'feasible' if data['feasible'] else 'infeasible'}; "
                f"{len(data['fundamental'])} fundamental, {len(data['null'])} null"
            )
            for entry in data["fundamental"]:
                comp = ",".join(map(str, entry["component"]))
                lines.append(f"  fundamental {{{comp}}} {entry['sign']}: ({', '.join(entry['x'])})")
            for entry in data["null"]:
                comp = ",".join(map(str, entry["component"]))
                lines.append(f"  null {{{comp}}}: {len(entry['basis'])} basis vector(s)")
            if data["canonical_particular"] is not None:
                lines.append(f"  canonical particular: ({', '.join(data['canonical_particular'])})")
        elif op == "pmatrix":
            verdict = "yes" if data["is_p_matrix"] else "no"
            lines.append(
                f"pmatrix: {verdict} (minors checked: {data['minors_checked']}"
                + (f", witness {{{','.join(map(str, data['witness']))}}}" if data["witness"] else "")
                + ")"
            )
            lines.append(
                f"  sufficient={data['sufficient_condition']} "
                f"necessary={data['necessary_condition']} strong_motzkin={data['strong_motzkin']}"
            )
            if data.get("_informational"):
                lines.append(
                    "  note: necessary-condition check is informational here "
                    "(matrix has negative entries or non-positive row sums)"
                )
        elif op == "witness":
            if not data["applicable"]:
                lines.append("witness: not applicable (every vertex lies in a closed SCC)")
            else:
                lines.append(
                    f"witness: open union {{{','.join(map(str, data['open_union']))}}}, "
                    f"ordering ({', '.join(map(str, data['ordering']))}), "
                    f"z = ({', '.join(data['z'])})"
                )
        elif op == "reach":
            lines.append(f"reach: root {data['root']}, closure {{{','.join(map(str, data['closure']))}}}")
            for t, step in enumerate(data["by_step"]):
                lines.append(f"  step {t}: {{{','.join(map(str, step))}}}")
        elif op == "oracle":
            lines.append(
                f"oracle: det={data['determinant']} sign={data['oracle_sign']} "
                f"analysis={data['analysis_sign']} consistent={str(data['consistent']).lower()}"
            )
    return "\n".join(lines) + "\n"


def _cmd_analyze(args: argparse.Namespace) -> int:
    ops = [op.strip() for op in args.ops.split(",") if op.strip()]
    if not ops:
        raise _UsageError("--ops must request at least one operation")
    unknown = [op for op in ops if op not in OPS]
    if unknown:
        raise _UsageError(f"unknown ops: {', '.join(unknown)} (valid: {', '.join(OPS)})")
    try:
        lam = to_rational(args.lam)
    except (ValueError, TypeError) as exc:
        raise _UsageError(f"--lambda: {exc}") from exc

    raw = _read_matrix(args.input, args.format)
    a = validate_class(raw)

    requested = set(ops)
    report: dict = {}
    graph = build_gap_graph(a)
    partition = scc_partition(graph)
    informational = any(x < 0 for row in a.rows for x in row) or not all(
        s > 0 for s in (sum(row, Fraction(0)) for row in a.rows)
    )
    for op in OPS:  # canonical key order, independent of request order
        if op not in requested:
            continue
        if op == "class":
            report["class"] = {"in_class": True}
        elif op == "graph":
            report["graph"] = graph_to_json(graph)
        elif op == "scc":
            report["scc"] = partition_to_json(partition)
        elif op == "sign":
            report["sign"] = sign_report_to_json(det_sign(a))
        elif op == "solutions":
            report["solutions"] = solution_space_to_json(solution_space(a, lam))
        elif op == "pmatrix":
            data = pmatrix_report_json(a)
            if args.out == "text" and informational:
                data["_informational"] = True
            report["pmatrix"] = data
        elif op == "witness":
            report["witness"] = witness_to_json(m_matrix_witness(a))
        elif op == "reach":
            if not 1 <= args.root <= a.n:
                raise _UsageError(f"--root must be in 1..{a.n}")
            sets = reachability_sets(a, args.root)
            report["reach"] = {
                "root": sets.root,
                "by_step": [list(s) for s in sets.by_step],
                "closure": list(sets.closure),
            }
        elif op == "oracle":
            report["oracle"] = _oracle_json(a)

    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(to_dot(graph, partition))

    if args.out == "json":
        for data in report.values():
            data.pop("_informational", None)
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(_render_text(report))

    oracle_data = report.get("oracle")
    if oracle_data is not None and not oracle_data["consistent"]:
        print("error: certified sign disagrees with the exact determinant", file=sys.stderr)
        return EXIT_ORACLE_MISMATCH
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        config = GenConfig(
            n=args.n,
            entry_bound=args.bound,
            non_negative=args.non_negative,
            row_sum=RowSumMode(args.row_sum),
            seed=args.seed,
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    if args.gap_pattern:
        raw = _read_pattern(args.gap_pattern)
        try:
            matrix = generate_with_gap_pattern(raw, config)
        except ValueError as exc:  # pattern shape/self-loop problems
            raise _UsageError(str(exc)) from exc
    else:
        matrix = generate(config)
    if args.format == "csv":
        sys.stdout.write(matrix_to_csv(matrix))
    else:
        sys.stdout.write(json.dumps(matrix_to_json(matrix), indent=2) + "\n")
    return EXIT_OK


def _read_pattern(path: str) -> tuple[tuple[int, ...], ...]:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    fmt = "json" if text.lstrip().startswith("{") else "csv"
    matrix = parse_csv_matrix(text) if fmt == "csv" else parse_json_matrix(text)
    pattern = []
    for row in matrix.rows:
        converted = []
        for x in row:
            if x not in (0, 1):
                raise MatrixFormatError("gap pattern entries must be 0 or 1")
            converted.append(int(x))
        pattern.append(tuple(converted))
    return tuple(pattern)


def _cmd_oracle(args: argparse.Namespace) -> int:
    raw = _read_matrix(args.input, args.format)
    a = validate_class(raw)
    data = _oracle_json(a)
    sys.stdout.write(json.dumps(data, indent=2) + "\n")
    if not data["consistent"]:
        print("error: certified sign disagrees with the exact determinant", file=sys.stderr)
        return EXIT_ORACLE_MISMATCH
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "gen":
            return _cmd_gen(args)
        return _cmd_oracle(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotInClassError as exc:
        print("error: matrix is not in the cyclically weakly decreasing class", file=sys.stderr)
        for violation in exc.violations:
            print(f"  {violation}", file=sys.stderr)
        return EXIT_NOT_IN_CLASS
    except (MatrixFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def console_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_entry()
