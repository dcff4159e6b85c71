"""Hamiltonian paths, path covers and constrained paths in skew graphs.

A Hamiltonian path can start at v when v is tough, except in tables where
a row or column holds (n + 1) / 2 vertices; `is_path_start` handles that case
with one step of lookahead.  The constructive side is a descent: from the
current end, step to any neighbour that can start a path of what is left.  Same-box vertices are
interchangeable, so each step tests one representative per box, and the
tallies needed by the test are kept incrementally in `_State`.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .exceptions import GuardExceeded, InputError, InvariantViolation
from .table import (
    BoxVertex,
    Pattern,
    SkewTable,
    box_plus_corners,
    classify_pattern,
)
from .toughness import deficit, is_path_start, longest_path_support

DP_BOX_GUARD = 6

Box = tuple[int, int]


@dataclass(frozen=True)
class HamPath:
    table: SkewTable
    vertices: tuple[BoxVertex, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __str__(self) -> str:
        return format_path(self.vertices)

    def validate(self) -> None:
        check_path(self.table, self.vertices, hamiltonian=True)


@dataclass(frozen=True)
class PathCover:
    table: SkewTable
    paths: tuple[tuple[BoxVertex, ...], ...]

    def __len__(self) -> int:
        return len(self.paths)

    def validate(self) -> None:
        seen = set()
        for p in self.paths:
            check_path(self.table, p, hamiltonian=False)
            for v in p:
                if v in seen:
                    raise InputError(f"vertex {v} appears in two paths")
                seen.add(v)
        if len(seen) != self.table.n:
            raise InputError(f"cover misses {self.table.n - len(seen)} vertices")

    def to_text(self) -> str:
        return "".join(f"path {i}: {format_path(p)}\n" for i, p in enumerate(self.paths))


def format_path(vertices: Iterable[BoxVertex]) -> str:
    return " ".join(str(v) for v in vertices)


def check_path(t: SkewTable, vertices: Sequence[BoxVertex], hamiltonian: bool = True) -> None:
    """Raise InputError unless `vertices` is a path of the skew graph of t."""
    if not vertices:
        raise InputError("empty path")
    seen = set()
    for v in vertices:
        t.check_vertex(v)
        if v in seen:
            raise InputError(f"vertex {v} repeated")
        seen.add(v)
    for u, v in zip(vertices, vertices[1:]):
        if u.row == v.row or u.col == v.col:
            raise InputError(f"consecutive vertices {u} and {v} are not adjacent")
    if hamiltonian and len(seen) != t.n:
        raise InputError(f"path covers {len(seen)} of {t.n} vertices")


class _State:
    """Mutable tallies of a shrinking table with O(1) updates.

    Keeps row/column totals, their maxima (via count histograms), and the
    non-empty box structure (per-row sorted column lists) so that connectivity
    and the deficit test are cheap except when the table is nearly tight.
    """

    def __init__(self, t: SkewTable):
        self.counts = [list(r) for r in t.counts]
        self.n = t.n
        self.row = [sum(r) for r in self.counts]
        self.col = [sum(self.counts[i][j] for i in range(t.rows)) for j in range(t.cols)]
        size = self.n + 2
        self.row_hist = [0] * size
        self.col_hist = [0] * size
        for x in self.row:
            self.row_hist[x] += 1
        for x in self.col:
            self.col_hist[x] += 1
        self.maxrow = max(self.row, default=0)
        self.maxcol = max(self.col, default=0)
        self.row_cols = [[j for j, x in enumerate(r) if x] for r in self.counts]
        self.nz_row = [len(c) for c in self.row_cols]
        self.nz_col = [sum(1 for i in range(t.rows) if self.counts[i][j]) for j in range(t.cols)]
        self.rows_live = [i for i, k in enumerate(self.nz_row) if k]
        self.cols_live = [j for j, k in enumerate(self.nz_col) if k]
        self.boxes = sum(self.nz_row)

    def remove(self, r: int, c: int) -> None:
        counts = self.counts
        counts[r][c] -= 1
        self.n -= 1
        k = self.row[r]
        self.row_hist[k] -= 1
        self.row_hist[k - 1] += 1
        self.row[r] = k - 1
        if k == self.maxrow and not self.row_hist[k]:
            self.maxrow = k - 1
        k = self.col[c]
        self.col_hist[k] -= 1
        self.col_hist[k - 1] += 1
        self.col[c] = k - 1
        if k == self.maxcol and not self.col_hist[k]:
            self.maxcol = k - 1
        if not counts[r][c]:
            self.boxes -= 1
            lst = self.row_cols[r]
            del lst[bisect.bisect_left(lst, c)]
            self.nz_row[r] -= 1
            self.nz_col[c] -= 1
            if not self.nz_row[r]:
                del self.rows_live[bisect.bisect_left(self.rows_live, r)]
            if not self.nz_col[c]:
                del self.cols_live[bisect.bisect_left(self.cols_live, c)]

    def restore(self, r: int, c: int) -> None:
        counts = self.counts
        if not counts[r][c]:
            self.boxes += 1
            bisect.insort(self.row_cols[r], c)
            if not self.nz_row[r]:
                bisect.insort(self.rows_live, r)
            if not self.nz_col[c]:
                bisect.insort(self.cols_live, c)
            self.nz_row[r] += 1
            self.nz_col[c] += 1
        counts[r][c] += 1
        self.n += 1
        k = self.row[r]
        self.row_hist[k] -= 1
        self.row_hist[k + 1] += 1
        self.row[r] = k + 1
        if k + 1 > self.maxrow:
            self.maxrow = k + 1
        k = self.col[c]
        self.col_hist[k] -= 1
        self.col_hist[k + 1] += 1
        self.col[c] = k + 1
        if k + 1 > self.maxcol:
            self.maxcol = k + 1

    def connected(self) -> bool:
        if self.n <= 1:
            return True
        live_r, live_c = len(self.rows_live), len(self.cols_live)
        if live_r <= 1 or live_c <= 1:
            return False
        if self.boxes == 4 and live_r == 2 and live_c == 2:
            return False
        if self.boxes > live_r + live_c - 1:
            return True
        # covered by one row plus one column through a non-empty box?
        for i in self.rows_live:
            for j in self.row_cols[i]:
                if self.nz_row[i] + self.nz_col[j] - 1 == self.boxes:
                    return False
        return True

    def deficit_zero(self) -> bool:
        n = self.n
        mr, mc = self.maxrow, self.maxcol
        if 2 * mr - 1 > n or 2 * mc - 1 > n:
            return False
        if mr + mc <= n:
            return True
        row, col, counts = self.row, self.col, self.counts
        for i in self.rows_live:
            ri = row[i]
            if ri + mc <= n:
                continue
            for j in self.cols_live:
                cj = col[j]
                if ri + cj > n:
                    s = counts[i][j]
                    if ri > s and cj > s:
                        return False
        return True

    def pathwise_tough(self) -> bool:
        if self.n <= 1:
            return True
        return self.connected() and self.deficit_zero()

    def tough(self, box: Box) -> bool:
        """Is a vertex of `box` tough in the current table?"""
        r, c = box
        n = self.n
        if n == 1:
            return True
        shared = self.counts[r][c]
        rt, ct = self.row[r], self.col[c]
        if 2 * rt - 1 > n or 2 * ct - 1 > n:
            return False
        if rt > shared and ct > shared and rt + ct > n:
            return False
        self.remove(r, c)
        ok = self.pathwise_tough()
        self.restore(r, c)
        return ok

    def tight(self) -> bool:
        n = self.n
        return 2 * self.maxrow - 1 == n or 2 * self.maxcol - 1 == n

    def start(self, box: Box) -> bool:
        """Can a Hamiltonian path of the current table start in `box`?"""
        if self.n == 1:
            return True
        if not self.tough(box):
            return False
        if not self.tight():
            return True
        self.remove(*box)
        ok = any(self.tough(b) for b in self.neighbours(box))
        self.restore(*box)
        return ok

    def neighbours(self, box: Box) -> Iterator[Box]:
        """Non-empty boxes adjacent to `box`, row-major."""
        r0, c0 = box
        for i in self.rows_live:
            if i == r0:
                continue
            for j in self.row_cols[i]:
                if j != c0:
                    yield (i, j)

    def snapshot(self, cols: int) -> SkewTable:
        return SkewTable.from_rows(self.counts, cols)


def _assign_ordinals(t: SkewTable, boxes: Sequence[Box], start: BoxVertex) -> tuple[BoxVertex, ...]:
    """Lowest unused ordinal per box, except the start vertex keeps its own."""
    nxt: dict[Box, int] = {}
    out = [start]
    for b in boxes[1:]:
        k = nxt.get(b, 0)
        if b == start.box and k == start.ord:
            k += 1
        out.append(BoxVertex(b[0], b[1], k))
        k += 1
        if b == start.box and k == start.ord:
            k += 1
        nxt[b] = k
    return tuple(out)


def ham_path_from(t: SkewTable, v: BoxVertex) -> HamPath | None:
    """A Hamiltonian path starting at v, or None when there is none.

    Runs in O(pqn) for a p x q table on n vertices.
    """
    v = t.check_vertex(v)
    if t.n == 1:
        return HamPath(t, (v,))
    if not is_path_start(t, v):
        return None
    state = _State(t)
    state.remove(*v.box)
    seq = [v.box]
    cur = v.box
    while state.n:
        nxt = None
        for b in state.neighbours(cur):
            if state.start(b):
                nxt = b
                break
        if nxt is None:
            seq.extend(_fallback(state, cur, t.cols)[1:])
            break
        state.remove(*nxt)
        seq.append(nxt)
        cur = nxt
    return HamPath(t, _assign_ordinals(t, seq, v))


def _fallback(state: _State, cur: Box, cols: int) -> list[Box]:
    # unreachable when the start test is exact; kept as a cross-check
    state.restore(*cur)
    remainder = state.snapshot(cols)
    state.remove(*cur)
    try:
        boxes = _boxcount_search(remainder, cur)
    except GuardExceeded as exc:
        raise InvariantViolation(f"path start at {cur} has no continuation: {exc}") from None
    if boxes is None:
        raise InvariantViolation(f"path start at {cur} has no continuation")
    return boxes


def ham_path_any(t: SkewTable) -> HamPath | None:
    """Some Hamiltonian path, or None when the table is not pathwise tough (or empty)."""
    if t.n == 0:
        return None
    aug = t.augmented(1)
    hub = BoxVertex(t.rows, t.cols, 0)
    found = ham_path_from(aug, hub)
    if found is None:
        return None
    return HamPath(t, found.vertices[1:])


def _boxcount_search(t: SkewTable, start: Box) -> list[Box] | None:
    boxes = t.nonempty_boxes()
    if len(boxes) > DP_BOX_GUARD:
        raise GuardExceeded(f"box-count search needs <= {DP_BOX_GUARD} non-empty boxes, got {len(boxes)}")
    if start not in boxes:
        raise InputError(f"start box {start} is empty")
    idx = {b: i for i, b in enumerate(boxes)}
    adj = [
        [k for k, b2 in enumerate(boxes) if b2[0] != b1[0] and b2[1] != b1[1]]
        for b1 in boxes
    ]
    counts = [t[b] for b in boxes]
    s = idx[start]
    counts[s] -= 1
    dead = set()
    trail = [s]
    left = t.n - 1
    # iterative DFS over (counts, current box) with a failure memo
    stack = [iter(adj[s])]
    while stack:
        if left == 0:
            return [boxes[i] for i in trail]
        nxt = None
        for k in stack[-1]:
            if not counts[k]:
                continue
            counts[k] -= 1
            seen_dead = (tuple(counts), k) in dead
            counts[k] += 1
            if not seen_dead:
                nxt = k
                break
        if nxt is None:
            stack.pop()
            last = trail.pop()
            if trail:
                dead.add((tuple(counts), last))
                counts[last] += 1
                left += 1
            continue
        counts[nxt] -= 1
        left -= 1
        trail.append(nxt)
        stack.append(iter(adj[nxt]))
    return None


def boxcount_dp(t: SkewTable, start: Box) -> HamPath | None:
    """Exact Hamiltonian path search over box-count states.

    Limited to tables with at most six non-empty boxes.  Ordinals are
    assigned ascending, so the path starts at ordinal 0 of `start`.
    """
    start = tuple(start)
    if not (0 <= start[0] < t.rows and 0 <= start[1] < t.cols):
        raise InputError(f"start box {start} outside the table")
    boxes = _boxcount_search(t, start)
    if boxes is None:
        return None
    return HamPath(t, _assign_ordinals(t, boxes, BoxVertex(start[0], start[1], 0)))


Picker = Callable[[_State, dict, list], list[BoxVertex]]


def _search(t: SkewTable, starts: Iterable[BoxVertex], pick: Picker) -> Iterator[tuple[BoxVertex, ...]]:
    """Depth-first search over vertex sequences; `pick` lists the next candidates.

    The candidate list is taken once per frame, so `pick` sees the state as
    it stands at that depth.
    """
    state = _State(t)
    free = {b: list(range(t[b])) for b in t.nonempty_boxes()}

    def take(v: BoxVertex):
        state.remove(v.row, v.col)
        lst = free[v.box]
        del lst[bisect.bisect_left(lst, v.ord)]

    def give(v: BoxVertex):
        state.restore(v.row, v.col)
        bisect.insort(free[v.box], v.ord)

    for s in starts:
        take(s)
        path = [s]
        if state.n == 0:
            yield tuple(path)
        else:
            stack = [iter(pick(state, free, path))]
            while stack:
                nxt = next(stack[-1], None)
                if nxt is None:
                    stack.pop()
                    if len(path) > 1:
                        give(path.pop())
                    continue
                take(nxt)
                path.append(nxt)
                if state.n == 0:
                    yield tuple(path)
                    give(path.pop())
                    continue
                stack.append(iter(pick(state, free, path)))
        give(s)


def _pick_boxes(state: _State, free: dict, path: list) -> list[BoxVertex]:
    return [
        BoxVertex(b[0], b[1], free[b][0])
        for b in list(state.neighbours(path[-1].box))
        if state.start(b)
    ]


def _pick_vertices(state: _State, free: dict, path: list) -> list[BoxVertex]:
    return [
        BoxVertex(b[0], b[1], k)
        for b in list(state.neighbours(path[-1].box))
        if state.start(b)
        for k in free[b]
    ]


def enumerate_ham_paths(
    t: SkewTable, v: BoxVertex, mode: str = "vertices", limit: int | None = None
) -> Iterator[HamPath]:
    """Every Hamiltonian path starting at v, each exactly once.

    mode="boxes" yields one representative per box sequence (lowest unused
    ordinal per box); mode="vertices" yields every vertex sequence.  Only
    continuations that can start a path of the remainder are explored, so
    no branch dead-ends.
    """
    v = t.check_vertex(v)
    if mode not in ("vertices", "boxes"):
        raise InputError(f"unknown enumeration mode {mode!r}")
    if limit is not None and limit <= 0:
        return
    if not is_path_start(t, v):
        return
    pick = _pick_vertices if mode == "vertices" else _pick_boxes
    for count, seq in enumerate(_search(t, [v], pick), start=1):
        yield HamPath(t, seq)
        if limit is not None and count >= limit:
            return


def _check_positions(t: SkewTable, constraints: Mapping[BoxVertex, int]) -> dict[BoxVertex, int]:
    out = {}
    taken = {}
    for v, pos in constraints.items():
        v = t.check_vertex(v)
        pos = int(pos)
        if not 0 <= pos < t.n:
            raise InputError(f"position {pos} of {v} outside 0..{t.n - 1}")
        if pos in taken:
            raise InputError(f"{taken[pos]} and {v} both placed at {pos}")
        taken[pos] = v
        out[v] = pos
    return out


def consistent_skew_path(t: SkewTable, constraints: Mapping[BoxVertex, int]) -> HamPath | None:
    """A Hamiltonian path placing each constrained vertex at its index."""
    fixed = _check_positions(t, constraints)
    if t.n == 0:
        return None
    at = {pos: v for v, pos in fixed.items()}

    def first_free(free: dict, box: Box):
        for k in free[box]:
            if BoxVertex(box[0], box[1], k) not in fixed:
                return BoxVertex(box[0], box[1], k)
        return None

    def pick(state: _State, free: dict, path: list) -> list[BoxVertex]:
        k = len(path)
        cur = path[-1]
        if k in at:
            f = at[k]
            ok = (
                f.row != cur.row
                and f.col != cur.col
                and f.ord in free.get(f.box, ())
                and state.start(f.box)
            )
            return [f] if ok else []
        out = []
        for b in list(state.neighbours(cur.box)):
            w = first_free(free, b)
            if w is not None and state.start(b):
                out.append(w)
        return out

    if 0 in at:
        starts = [at[0]] if is_path_start(t, at[0]) else []
    else:
        free0 = {b: list(range(t[b])) for b in t.nonempty_boxes()}
        starts = []
        for b in t.nonempty_boxes():
            w = first_free(free0, b)
            if w is not None and is_path_start(t, w):
                starts.append(w)
    for seq in _search(t, starts, pick):
        return HamPath(t, seq)
    return None


def _zigzag(big: Box, big_count: int, small: Box, small_count: int) -> list[tuple[BoxVertex, ...]]:
    """Cover K_{x,y} (x >= y >= 1): one alternating path plus leftover singletons."""
    path = []
    for k in range(small_count):
        path.append(BoxVertex(big[0], big[1], k))
        path.append(BoxVertex(small[0], small[1], k))
    used = small_count
    if big_count > small_count:
        path.append(BoxVertex(big[0], big[1], used))
        used += 1
    out = [tuple(path)]
    out += [(BoxVertex(big[0], big[1], k),) for k in range(used, big_count)]
    return out


def _box_plus_cover(t: SkewTable, pc) -> list[tuple[BoxVertex, ...]]:
    (r1, r2), (c1, c2) = pc.rows, pc.cols
    a, b, c, d = box_plus_corners(t, pc)
    paths = []
    for (p, x), (q, y) in (
        (((r1, c1), a), ((r2, c2), d)),
        (((r1, c2), b), ((r2, c1), c)),
    ):
        if x >= y:
            paths += _zigzag(p, x, q, y)
        else:
            paths += _zigzag(q, y, p, x)
    paths.sort(key=len, reverse=True)
    return paths


def longest_path(t: SkewTable) -> tuple[BoxVertex, ...]:
    """A longest path of the skew graph of t."""
    path = ham_path_any(longest_path_support(t))
    if path is None:
        raise InvariantViolation("traceable sub-table has no Hamiltonian path")
    return path.vertices


def _split_augmented(t: SkewTable, extra: int) -> list[tuple[BoxVertex, ...]]:
    """Cut a Hamiltonian path of t plus `extra` universal vertices at those vertices."""
    path = ham_path_any(t.augmented(extra))
    if path is None:
        raise InvariantViolation("augmented table has no Hamiltonian path")
    pieces: list[tuple[BoxVertex, ...]] = []
    cur: list[BoxVertex] = []
    for v in path.vertices:
        if v.row == t.rows:
            if cur:
                pieces.append(tuple(cur))
            cur = []
        else:
            cur.append(v)
    if cur:
        pieces.append(tuple(cur))
    return pieces


def min_path_cover(t: SkewTable) -> PathCover:
    """A minimum path cover.

    Outside the box-plus pattern the cover has DF + 1 paths.  When a path
    on n - DF vertices exists the cover is that path plus singletons;
    otherwise a Hamiltonian path of t with DF universal vertices added is
    cut at the added vertices.
    """
    if t.n == 0:
        raise InputError("the empty table has no path cover")
    pc = classify_pattern(t)
    if pc.kind is Pattern.BOX_PLUS:
        return PathCover(t, tuple(_box_plus_cover(t, pc)))

    df = deficit(t).value
    longest = longest_path(t)
    if len(longest) == t.n - df:
        used = set(longest)
        paths = [longest] + [(v,) for v in t.vertices() if v not in used]
    else:
        paths = sorted(_split_augmented(t, df), key=len, reverse=True)
    if len(paths) != df + 1:
        raise InvariantViolation(f"cover has {len(paths)} paths, expected {df + 1}")
    return PathCover(t, tuple(paths))
