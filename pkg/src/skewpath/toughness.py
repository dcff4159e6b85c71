"""Pathwise toughness, tough vertices, deficit, path covers and longest paths.

Everything here is computed from row and column tallies.  With
r(R) = |V(R)| and c(C) = |V(C)| the governing quantity is

    M(G) = max{2 r(R) - 1, 2 c(C) - 1, r(R) + c(C)}

where a pair term r(R) + c(C) only counts when each of row R and column C
holds a vertex outside their shared box.  The deficit is max(0, M - n).

The closed forms for the path covering number and the longest path do not
hold for the box-plus pattern (two disjoint complete bipartite graphs), which
gets its own branch.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .exceptions import InputError
from .table import (
    BoxVertex,
    Pattern,
    SkewTable,
    box_plus_corners,
    classify_pattern,
    component_count,
    remove_vertex,
)


@dataclass(frozen=True)
class Deficit:
    value: int
    maximum: int | None  # M(G); None for the empty table
    kind: str | None = None  # "row", "column" or "pair"
    row: int | None = None
    col: int | None = None

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "maximum": self.maximum,
            "argmax": None if self.kind is None else {"kind": self.kind, "row": self.row, "col": self.col},
        }


@dataclass(frozen=True)
class ToughnessReport:
    pathwise_tough: bool
    witness: str | None = None  # "row", "column", "pair" or "disconnected"
    row: int | None = None
    col: int | None = None
    components: int | None = None

    def __bool__(self) -> bool:
        return self.pathwise_tough

    def describe(self) -> str:
        if self.pathwise_tough:
            return "pathwise_tough=true"
        if self.witness == "row":
            where = f"row {self.row}"
        elif self.witness == "column":
            where = f"column {self.col}"
        elif self.witness == "pair":
            where = f"pair row {self.row} column {self.col}"
        else:
            where = f"disconnected components={self.components}"
        return f"pathwise_tough=false witness={where}"

    def to_dict(self) -> dict:
        return {
            "pathwise_tough": self.pathwise_tough,
            "witness": None
            if self.pathwise_tough
            else {"kind": self.witness, "row": self.row, "col": self.col, "components": self.components},
        }


def _pair_admissible(t: SkewTable, i: int, j: int, row_counts, col_counts) -> bool:
    shared = t.counts[i][j]
    return row_counts[i] > shared and col_counts[j] > shared


def _terms(t: SkewTable):
    """Yield (value, kind, row, col) in tie-break order: rows, columns, pairs."""
    tal = t.tallies()
    rc, cc = tal.row_counts, tal.col_counts
    for i, r in enumerate(rc):
        if r:
            yield 2 * r - 1, "row", i, None
    for j, c in enumerate(cc):
        if c:
            yield 2 * c - 1, "column", None, j
    for i in range(t.rows):
        for j in range(t.cols):
            if _pair_admissible(t, i, j, rc, cc):
                yield rc[i] + cc[j], "pair", i, j


def deficit(t: SkewTable) -> Deficit:
    best = None
    for term in _terms(t):
        if best is None or term[0] > best[0]:
            best = term
    if best is None:
        return Deficit(0, None)
    value, kind, row, col = best
    return Deficit(max(0, value - t.n), value, kind, row, col)


def is_pathwise_tough(t: SkewTable) -> ToughnessReport:
    for value, kind, row, col in _terms(t):
        if value > t.n:
            return ToughnessReport(False, kind, row, col)
    comps = component_count(t)
    if comps > 1:
        return ToughnessReport(False, "disconnected", components=comps)
    return ToughnessReport(True)


def is_tough_vertex(t: SkewTable, v: BoxVertex) -> bool:
    """Whether some Hamiltonian path of the table may start at v.

    v is tough when the table minus v is pathwise tough and removing any
    superset S of N(v) leaves at most |S| components.  N(v) is everything
    outside v's row and column, so the second condition only involves the
    row-plus-column remainder around v and reduces to the three bounds below.
    """
    v = t.check_vertex(v)
    n = t.n
    r = sum(t.counts[v.row])
    c = sum(t.counts[i][v.col] for i in range(t.rows))
    shared = t[v.box]
    if n < 2 * r - 1 or n < 2 * c - 1:
        return False
    if r > shared and c > shared and n < r + c:
        return False
    return bool(is_pathwise_tough(remove_vertex(t, v)))


def has_tight_line(t: SkewTable) -> bool:
    """Some row or column holds (n + 1) / 2 vertices."""
    tal = t.tallies()
    return any(2 * x - 1 == t.n for x in tal.row_counts + tal.col_counts)


def is_path_start(t: SkewTable, v: BoxVertex) -> bool:
    """Whether some Hamiltonian path of the table starts at v.

    Toughness of v is necessary but not always sufficient.  It fails only
    when a row or column holds (n + 1) / 2 vertices, so that every path
    alternates in and out of that line.  The remainder t - v then has even
    order and no such line, so one step of lookahead settles it.
    """
    v = t.check_vertex(v)
    if t.n == 1:
        return True
    if not is_tough_vertex(t, v):
        return False
    if not has_tight_line(t):
        return True
    rest = remove_vertex(t, v)
    return any(
        is_tough_vertex(rest, BoxVertex(i, j, 0))
        for i, j in rest.nonempty_boxes()
        if i != v.row and j != v.col
    )


def path_cover_number(t: SkewTable) -> int:
    if t.n == 0:
        return 0
    pc = classify_pattern(t)
    if pc.kind is Pattern.BOX_PLUS:
        a, b, c, d = box_plus_corners(t, pc)
        return max(abs(a - d), 1) + max(abs(b - c), 1)
    return deficit(t).value + 1


def _bipartite_longest(x: int, y: int) -> int:
    """Edges on a longest path of K_{x,y} with x, y >= 1."""
    low = min(x, y)
    return 2 * low - 1 if x == y else 2 * low


def _bipartite_support(x: int, y: int) -> tuple[int, int]:
    """Side sizes of the vertex set of a longest path in K_{x,y}."""
    low = min(x, y)
    if x == y:
        return x, y
    return (low + 1, low) if x > y else (low, low + 1)


def _capped_flow(t: SkewTable, row_cap: int, col_cap: int) -> tuple[int, list[list[int]]]:
    """Largest sub-table x <= t with row sums <= row_cap and column sums <= col_cap."""
    g = nx.DiGraph()
    for i, row in enumerate(t.counts):
        for j, x in enumerate(row):
            if x:
                g.add_edge("src", ("r", i), capacity=row_cap)
                g.add_edge(("r", i), ("c", j), capacity=x)
                g.add_edge(("c", j), "snk", capacity=col_cap)
    value, flow = nx.maximum_flow(g, "src", "snk")
    sub = [[0] * t.cols for _ in range(t.rows)]
    for i in range(t.rows):
        for (_, j), f in flow.get(("r", i), {}).items():
            sub[i][j] = f
    return value, sub


def _trim(sub: list[list[int]], excess: int) -> None:
    for row in reversed(sub):
        for j in reversed(range(len(row))):
            take = min(row[j], excess)
            row[j] -= take
            excess -= take
            if not excess:
                return


def _split_box_plus(t: SkewTable, sub: list[list[int]]) -> bool:
    """Trade one corner vertex of a box-plus sub-table for a vertex elsewhere.

    Row and column sums never grow, so the caps survive.  Returns False
    when every spare vertex of t sits in the four corner boxes.
    """
    cand = SkewTable.from_rows(sub, t.cols)
    pc = classify_pattern(cand)
    if pc.kind is not Pattern.BOX_PLUS:
        return True
    rows, cols = pc.rows, pc.cols
    for i, j in t.nonempty_boxes():
        if i in rows and j in cols:
            continue
        if t[i, j] > sub[i][j]:
            if i in rows:
                corner = (i, cols[0])
            elif j in cols:
                corner = (rows[0], j)
            else:
                corner = (rows[0], cols[0])
            sub[corner[0]][corner[1]] -= 1
            sub[i][j] += 1
            return True
    return False


def _traceable_subtable(t: SkewTable, size: int) -> SkewTable | None:
    """A pathwise-tough sub-table with `size` vertices, or None.

    For size 2h the only constraints are row and column sums at most h (a
    pair term can then never exceed the size), so this is a capped
    transportation problem.  For size 2h - 1 a pair term can exceed the size
    only when a row and a column both hold h vertices and neither lies
    inside their shared box; so either no row is full, or no column is, or
    some box holds h vertices with h - 1 more outside its row and column.
    Box-plus sub-tables are the only disconnected survivors and are traded
    away when possible.
    """
    if size == 1:
        i, j = t.nonempty_boxes()[0]
        sub = [[0] * t.cols for _ in range(t.rows)]
        sub[i][j] = 1
        return SkewTable.from_rows(sub, t.cols)
    h = (size + 1) // 2
    if size % 2 == 0:
        value, sub = _capped_flow(t, h, h)
        if value >= size:
            _trim(sub, value - size)
            if _split_box_plus(t, sub):
                return SkewTable.from_rows(sub, t.cols)
        return None
    for caps in ((h - 1, h), (h, h - 1)):
        value, sub = _capped_flow(t, *caps)
        if value >= size:
            _trim(sub, value - size)
            return SkewTable.from_rows(sub, t.cols)
    tal = t.tallies()
    for i, j in t.nonempty_boxes():
        if t[i, j] < h:
            continue
        outside = t.n - tal.row_counts[i] - tal.col_counts[j] + t[i, j]
        if outside < h - 1:
            continue
        sub = [
            [0 if a == i or b == j else x for b, x in enumerate(row)]
            for a, row in enumerate(t.counts)
        ]
        _trim(sub, outside - (h - 1))
        sub[i][j] = h
        return SkewTable.from_rows(sub, t.cols)
    return None


def longest_path_support(t: SkewTable) -> SkewTable:
    """A largest sub-table (entrywise <= t) that has a Hamiltonian path.

    Dropping an end of a Hamiltonian path leaves a traceable sub-table, so
    traceable sizes form an interval 1..m and a binary search finds m.
    """
    if t.n == 0:
        raise InputError("the empty table has no paths")
    pc = classify_pattern(t)
    if pc.kind is Pattern.BOX_PLUS:
        a, b, c, d = box_plus_corners(t, pc)
        (r1, r2), (c1, c2) = pc.rows, pc.cols
        sub = [[0] * t.cols for _ in range(t.rows)]
        if _bipartite_longest(a, d) >= _bipartite_longest(b, c):
            sub[r1][c1], sub[r2][c2] = _bipartite_support(a, d)
        else:
            sub[r1][c2], sub[r2][c1] = _bipartite_support(b, c)
        return SkewTable.from_rows(sub, t.cols)

    hi = t.n - deficit(t).value
    best = _traceable_subtable(t, hi)
    if best is not None:
        return best
    lo, best = 1, _traceable_subtable(t, 1)
    hi -= 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        found = _traceable_subtable(t, mid)
        if found is None:
            hi = mid - 1
        else:
            lo, best = mid, found
    return best


def max_path_length(t: SkewTable) -> int:
    """Edges on a longest path.

    Usually n - DF - 1, but a table can fall one short: with two maximal
    pair terms on different boxes no single deletion lowers both.
    """
    return longest_path_support(t).n - 1
