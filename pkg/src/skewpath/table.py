"""Tabular model of skew graphs.

A skew graph is the complement of the line graph of a bipartite multigraph H.
It is stored as a p x q grid of vertex counts: box (i, j) holds t(i, j)
mutually independent vertices, and two vertices are adjacent exactly when
their boxes differ in both row and column.  The same grid is the biadjacency
matrix of H, so the line graph L(H) joins vertices that share a row or a
column (or a box).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

from .exceptions import InputError


class BoxVertex(NamedTuple):
    row: int
    col: int
    ord: int

    @property
    def box(self) -> tuple[int, int]:
        return (self.row, self.col)

    def __str__(self) -> str:
        return f"{self.row},{self.col},{self.ord}"

    @classmethod
    def parse(cls, text: str) -> "BoxVertex":
        parts = text.strip().split(",")
        if len(parts) != 3:
            raise InputError(f"vertex must look like r,c,k: {text!r}")
        try:
            row, col, ordinal = (int(p) for p in parts)
        except ValueError:
            raise InputError(f"vertex must look like r,c,k: {text!r}") from None
        return cls(row, col, ordinal)


@dataclass(frozen=True)
class SkewTable:
    counts: tuple[tuple[int, ...], ...]
    cols: int = -1
    n: int = field(init=False)

    def __post_init__(self):
        counts = tuple(tuple(int(x) for x in row) for row in self.counts)
        width = len(counts[0]) if counts else max(self.cols, 0)
        for i, row in enumerate(counts):
            if len(row) != width:
                raise InputError(f"row {i} has {len(row)} entries, expected {width}")
            if any(x < 0 for x in row):
                raise InputError(f"row {i} has a negative entry")
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "n", sum(map(sum, counts)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "SkewTable":
        return cls(tuple(tuple(r) for r in rows), -1 if cols is None else cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SkewTable":
        return cls(tuple((0,) * cols for _ in range(rows)), cols)

    @classmethod
    def ones(cls, rows: int, cols: int) -> "SkewTable":
        return cls(tuple((1,) * cols for _ in range(rows)), cols)

    @property
    def rows(self) -> int:
        return len(self.counts)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, box: tuple[int, int]) -> int:
        i, j = box
        return self.counts[i][j]

    def nonempty_boxes(self) -> list[tuple[int, int]]:
        """Boxes holding at least one vertex, in row-major order."""
        return [
            (i, j)
            for i, row in enumerate(self.counts)
            for j, x in enumerate(row)
            if x
        ]

    def vertices(self) -> Iterator[BoxVertex]:
        for i, row in enumerate(self.counts):
            for j, x in enumerate(row):
                for k in range(x):
                    yield BoxVertex(i, j, k)

    def check_vertex(self, v: BoxVertex) -> BoxVertex:
        v = BoxVertex(*v)
        if not (0 <= v.row < self.rows and 0 <= v.col < self.cols):
            raise InputError(f"vertex {v} lies outside the {self.rows}x{self.cols} table")
        if not 0 <= v.ord < self.counts[v.row][v.col]:
            raise InputError(
                f"vertex {v} does not exist: box ({v.row},{v.col}) holds "
                f"{self.counts[v.row][v.col]} vertices"
            )
        return v

    def tallies(self) -> "Tallies":
        row_counts = tuple(sum(r) for r in self.counts)
        col_counts = tuple(
            sum(self.counts[i][j] for i in range(self.rows)) for j in range(self.cols)
        )
        return Tallies(row_counts, col_counts)

    def with_count(self, box: tuple[int, int], value: int) -> "SkewTable":
        i, j = box
        rows = [list(r) for r in self.counts]
        rows[i][j] = value
        return SkewTable.from_rows(rows, self.cols)

    def remove_vertex(self, v: BoxVertex) -> "SkewTable":
        return remove_vertex(self, v)

    def augmented(self, extra: int = 1) -> "SkewTable":
        """Append a new row and column whose shared box holds `extra` vertices.

        The new vertices are adjacent to every original vertex.
        """
        rows = [list(r) + [0] for r in self.counts]
        rows.append([0] * self.cols + [extra])
        return SkewTable.from_rows(rows, self.cols + 1)

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        lines += [" ".join(str(x) for x in row) for row in self.counts]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Tallies:
    row_counts: tuple[int, ...]
    col_counts: tuple[int, ...]

    @property
    def rows_desc(self) -> list[tuple[int, int]]:
        """(count, row) pairs, largest count first, ties by ascending row."""
        return sorted(((c, i) for i, c in enumerate(self.row_counts)), key=lambda x: (-x[0], x[1]))

    @property
    def cols_desc(self) -> list[tuple[int, int]]:
        return sorted(((c, j) for j, c in enumerate(self.col_counts)), key=lambda x: (-x[0], x[1]))


def parse_table(text: str) -> SkewTable:
    """Parse the table file format.

    First non-comment line is ``p q``; then p lines of q non-negative
    integers.  ``#`` starts a comment that runs to the end of the line.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            lines.append((lineno, content))
    if not lines:
        raise InputError("missing 'p q' header", line=1)

    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise InputError(f"header must be 'p q', got {header!r}", line=lineno)
    try:
        p, q = int(parts[0]), int(parts[1])
    except ValueError:
        raise InputError(f"header must be two integers, got {header!r}", line=lineno) from None
    if p < 0 or q < 0:
        raise InputError("table dimensions must be non-negative", line=lineno)

    body = lines[1:]
    if len(body) != p:
        where = body[p][0] if len(body) > p else (body[-1][0] if body else lineno) + 1
        raise InputError(f"expected {p} rows, found {len(body)}", line=where)

    rows = []
    for lineno, content in body:
        try:
            row = [int(x) for x in content.split()]
        except ValueError:
            raise InputError(f"non-integer entry in {content!r}", line=lineno) from None
        if len(row) != q:
            raise InputError(f"expected {q} entries, found {len(row)}", line=lineno)
        if any(x < 0 for x in row):
            raise InputError("negative entry", line=lineno)
        rows.append(row)
    return SkewTable.from_rows(rows, q)


def load_table(path) -> SkewTable:
    with open(path, encoding="utf-8") as fh:
        return parse_table(fh.read())


def adjacent(t: SkewTable, u: BoxVertex, v: BoxVertex) -> bool:
    u = t.check_vertex(u)
    v = t.check_vertex(v)
    if u == v:
        raise InputError(f"adjacency of {u} with itself is undefined")
    return u.row != v.row and u.col != v.col


def remove_vertex(t: SkewTable, v: BoxVertex) -> SkewTable:
    v = t.check_vertex(v)
    return t.with_count(v.box, t[v.box] - 1)


class Pattern(enum.Enum):
    EMPTY = "empty"
    SINGLE_ROW = "single-row"
    SINGLE_COLUMN = "single-column"
    BOX_PLUS = "box-plus"
    ROW_UNION_COLUMN = "row-union-column"
    CONNECTED = "connected"


@dataclass(frozen=True)
class PatternClass:
    kind: Pattern
    rows: tuple[int, ...] = ()
    cols: tuple[int, ...] = ()
    # vertices in the shared box of a row-union-column pattern
    intersection: int | None = None

    def describe(self) -> str:
        k = self.kind
        if k is Pattern.SINGLE_ROW:
            return f"{k.value} row={self.rows[0]}"
        if k is Pattern.SINGLE_COLUMN:
            return f"{k.value} col={self.cols[0]}"
        if k is Pattern.BOX_PLUS:
            return f"{k.value} rows={self.rows[0]},{self.rows[1]} cols={self.cols[0]},{self.cols[1]}"
        if k is Pattern.ROW_UNION_COLUMN:
            return f"{k.value} row={self.rows[0]} col={self.cols[0]} p={self.intersection}"
        return k.value

    def to_dict(self) -> dict:
        return {
            "pattern": self.kind.value,
            "rows": list(self.rows),
            "cols": list(self.cols),
            "intersection": self.intersection,
        }


def classify_pattern(t: SkewTable) -> PatternClass:
    """Classify the table into one of the disconnected-graph patterns, or Connected.

    Precedence: Empty, SingleRow, SingleColumn, BoxPlus, RowUnionColumn,
    Connected.  A lone non-empty box is SingleRow.
    """
    boxes = t.nonempty_boxes()
    if not boxes:
        return PatternClass(Pattern.EMPTY)
    rows = sorted({i for i, _ in boxes})
    cols = sorted({j for _, j in boxes})
    if len(rows) == 1:
        return PatternClass(Pattern.SINGLE_ROW, rows=(rows[0],))
    if len(cols) == 1:
        return PatternClass(Pattern.SINGLE_COLUMN, cols=(cols[0],))
    if len(boxes) == 4 and len(rows) == 2 and len(cols) == 2:
        return PatternClass(Pattern.BOX_PLUS, rows=tuple(rows), cols=tuple(cols))

    per_row = {i: 0 for i in rows}
    per_col = {j: 0 for j in cols}
    for i, j in boxes:
        per_row[i] += 1
        per_col[j] += 1
    nonempty = set(boxes)
    # both legs are non-empty automatically: rows and cols each have >= 2 members
    for r in rows:
        for c in cols:
            covered = per_row[r] + per_col[c] - ((r, c) in nonempty)
            if covered == len(boxes):
                return PatternClass(
                    Pattern.ROW_UNION_COLUMN, rows=(r,), cols=(c,), intersection=t[r, c]
                )
    return PatternClass(Pattern.CONNECTED)


def component_count(t: SkewTable, pattern: PatternClass | None = None) -> int:
    pc = pattern or classify_pattern(t)
    if pc.kind is Pattern.EMPTY:
        return 0
    if pc.kind in (Pattern.SINGLE_ROW, Pattern.SINGLE_COLUMN):
        return t.n
    if pc.kind is Pattern.BOX_PLUS:
        return 2
    if pc.kind is Pattern.ROW_UNION_COLUMN:
        return pc.intersection + 1
    return 1


def box_plus_corners(t: SkewTable, pc: PatternClass) -> tuple[int, int, int, int]:
    """Corner counts (a, b, c, d): a, b on the top row and c, d below.

    The graph splits into K_{a,d} and K_{b,c}.
    """
    (r1, r2), (c1, c2) = pc.rows, pc.cols
    return t[r1, c1], t[r1, c2], t[r2, c1], t[r2, c2]
