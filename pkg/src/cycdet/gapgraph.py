"""Gap graph construction, SCC partition, and reachability closures.

A *gap* sits right before entry a[i][j] when the previous entry in the same
row (cyclically: column n precedes column 1) is strictly larger.  The gap
graph on vertices {1,...,n} has an edge i -> j exactly when a gap sits right
before a[i][j]; kappa is its 0-1 adjacency matrix.  An SCC is *closed* when
no edge leaves it, *open* otherwise; every gap graph of a class member has at
least one closed SCC.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalConsistencyError
from .matrix import CyclicMatrix, IndexSet, wrap_index


@dataclass(frozen=True)
class GapGraph:
    n: int
    kappa: tuple[tuple[int, ...], ...]
    out_edges: tuple[tuple[int, ...], ...]  # per-vertex ascending targets, 1-based


@dataclass(frozen=True)
class SccPartition:
    components: tuple[IndexSet, ...]  # sorted by smallest member, vertices ascending
    closed_flags: tuple[bool, ...]
    closed_union: IndexSet
    open_union: IndexSet

    @property
    def closed_components(self) -> tuple[IndexSet, ...]:
        return tuple(c for c, f in zip(self.components, self.closed_flags) if f)

    @property
    def open_components(self) -> tuple[IndexSet, ...]:
        return tuple(c for c, f in zip(self.components, self.closed_flags) if not f)


@dataclass(frozen=True)
class ReachabilitySets:
    """Column positions reachable along gap chains from a root row.

    by_step[t] holds the positions k such that some length-t walk in the gap
    graph runs from the root to vertex [k+1]; closure is their union, computed
    to the exact fixpoint of the cumulative union.
    """

    root: int
    by_step: tuple[IndexSet, ...]
    closure: IndexSet


def build_gap_graph(a: CyclicMatrix) -> GapGraph:
    n = a.n
    kappa_rows = []
    out_edges = []
    for i in range(n):
        row = a.rows[i]
        kappa_row = [0] * n
        for j in range(n):
            prev = row[j - 1]  # j == 0 wraps to column n
            if prev > row[j]:
                kappa_row[j] = 1
        if kappa_row[i] != 0:
            raise InternalConsistencyError(
                f"self-loop at vertex {i + 1}: the diagonal is a weak row maximum, "
                "so a gap right before it is impossible"
            )
        kappa_rows.append(tuple(kappa_row))
        out_edges.append(tuple(j + 1 for j in range(n) if kappa_row[j]))
    return GapGraph(n=n, kappa=tuple(kappa_rows), out_edges=tuple(out_edges))


def _tarjan(n: int, out_edges: tuple[tuple[int, ...], ...]) -> list[list[int]]:
    """Iterative Tarjan SCC over 1-based vertices; stack depth independent of n.

    Adjacency lists are ascending, so the traversal (and hence the component
    discovery order) is deterministic.
    """
    index = [0] * (n + 1)  # 0 = unvisited; stored index is counter+1
    lowlink = [0] * (n + 1)
    on_stack = [False] * (n + 1)
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 1

    for root in range(1, n + 1):
        if index[root]:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, edge_pos = work[-1]
            if edge_pos == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            targets = out_edges[v - 1]
            for pos in range(edge_pos, len(targets)):
                w = targets[pos]
                if not index[w]:
                    work[-1] = (v, pos + 1)
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w]:
                    lowlink[v] = min(lowlink[v], index[w])
            if descended:
                continue
            if lowlink[v] == index[v]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    component.append(w)
                    if w == v:
                        break
                components.append(sorted(component))
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
    return components


def scc_partition(g: GapGraph) -> SccPartition:
    components = sorted(_tarjan(g.n, g.out_edges), key=lambda c: c[0])
    flags = []
    for component in components:
        members = set(component)
        closed = all(w in members for v in component for w in g.out_edges[v - 1])
        flags.append(closed)
    if not any(flags):
        raise InternalConsistencyError("every gap graph has at least one closed SCC")
    closed_union = tuple(sorted(v for c, f in zip(components, flags) if f for v in c))
    open_union = tuple(sorted(v for c, f in zip(components, flags) if not f for v in c))
    return SccPartition(
        components=tuple(tuple(c) for c in components),
        closed_flags=tuple(flags),
        closed_union=closed_union,
        open_union=open_union,
    )


def _gap_positions(a: CyclicMatrix) -> list[set[int]]:
    """Per row r (0-based list, 1-based content): {k : a[r][k] > a[r][k+1]},
    i.e. the positions k whose successor column [k+1] receives an edge from r."""
    n = a.n
    sets = []
    for i in range(n):
        row = a.rows[i]
        sets.append({k + 1 for k in range(n) if row[k] > row[(k + 1) % n]})
    return sets


def reachability_sets(a: CyclicMatrix, r: int, max_steps: int | None = None) -> ReachabilitySets:
    """Iterate the step sets to the fixpoint of their cumulative union.

    Once one step adds nothing new, no later step can (the step map is a
    monotone image of a subset of the closure), so stopping there is exact.
    by_step records every computed step, capped at max_steps entries past
    step 0 when a bound is given; the closure is exact regardless.
    """
    n = a.n
    if not 1 <= r <= n:
        raise ValueError(f"root {r} out of range 1..{n}")
    gaps = _gap_positions(a)
    current = {wrap_index(r - 1, n)}
    by_step = [tuple(sorted(current))]
    closure = set(current)
    while True:
        current = {k for s in current for k in gaps[wrap_index(s + 1, n) - 1]}
        if max_steps is None or len(by_step) <= max_steps:
            by_step.append(tuple(sorted(current)))
        if current <= closure:
            break
        closure |= current
    return ReachabilitySets(root=r, by_step=tuple(by_step), closure=tuple(sorted(closure)))


def check_connected_condition(a: CyclicMatrix) -> bool:
    """True iff every two reachability closures intersect.

    Equivalent to the gap graph having exactly one closed SCC.
    """
    closures = [set(reachability_sets(a, r).closure) for r in range(1, a.n + 1)]
    return all(
        closures[i] & closures[j] for i in range(a.n) for j in range(i + 1, a.n)
    )


def graph_to_json(g: GapGraph) -> dict:
    return {"n": g.n, "kappa": [list(row) for row in g.kappa]}


def partition_to_json(p: SccPartition) -> dict:
    return {
        "components": [
            {"vertices": list(c), "closed": f} for c, f in zip(p.components, p.closed_flags)
        ]
    }


def to_dot(g: GapGraph, p: SccPartition) -> str:
    """Graphviz rendering: closed SCC clusters get solid borders, open ones dashed."""
    lines = ["digraph gapgraph {"]
    for idx, (component, closed) in enumerate(zip(p.components, p.closed_flags)):
        style = "solid" if closed else "dashed"
        members = " ".join(f"{v};" for v in component)
        lines.append(f"  subgraph cluster_{idx} {{ style={style}; {members} }}")
    for v in range(1, g.n + 1):
        for w in g.out_edges[v - 1]:
            lines.append(f"  {v} -> {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"
