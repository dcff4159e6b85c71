"""Exact small-scale machinery for arbitrary simple graphs.

A partial lambda-labeling c of G extends to an injective labeling with labels
0..n-1 (adjacent labels at least 2 apart) exactly when the complement of G
has a Hamiltonian path that visits every pre-labeled vertex v at index c(v).
The search here is a plain backtracking over path prefixes; it is exponential
in general and guarded at 18 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from ._guard import check_guard
from .exceptions import InputError

SOLVER_GUARD = 18


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset = frozenset()
    adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise InputError("vertex count must be non-negative")
        norm = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge ({u},{v}) outside 0..{self.n - 1}")
            norm.add((min(u, v), max(u, v)))
        adj = [set() for _ in range(self.n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(frozenset(a) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        return cls(n, frozenset(tuple(e) for e in edges))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def complement(g: SimpleGraph) -> SimpleGraph:
    edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if v not in g.adj[u]]
    return SimpleGraph.from_edges(g.n, edges)


@dataclass(frozen=True)
class ConstraintSet:
    """Absolute positions (vertex -> path index) or a distance pattern.

    In gap mode, consecutive anchors anchors[i], anchors[i+1] must sit
    gaps[i] steps apart along the path, in either direction.
    """

    mode: str
    absolute: Mapping[int, int] = field(default_factory=dict)
    anchors: tuple[int, ...] = ()
    gaps: tuple[int, ...] = ()

    @classmethod
    def positions(cls, mapping: Mapping[int, int]) -> "ConstraintSet":
        return cls("absolute", dict(mapping))

    @classmethod
    def pattern(cls, anchors: Sequence[int], gaps: Sequence[int]) -> "ConstraintSet":
        return cls("gaps", {}, tuple(anchors), tuple(gaps))

    @classmethod
    def empty(cls) -> "ConstraintSet":
        return cls("absolute", {})

    def reversed(self) -> "ConstraintSet":
        if self.mode != "gaps":
            return self
        return ConstraintSet.pattern(self.anchors[::-1], self.gaps[::-1])

    def validate(self, n: int) -> None:
        if self.mode == "absolute":
            seen = {}
            for v, pos in self.absolute.items():
                if not 0 <= v < n:
                    raise InputError(f"constrained vertex {v} outside 0..{n - 1}")
                if not 0 <= pos < n:
                    raise InputError(f"position {pos} of vertex {v} outside 0..{n - 1}")
                if pos in seen:
                    raise InputError(f"vertices {seen[pos]} and {v} both placed at {pos}")
                seen[pos] = v
        elif self.mode == "gaps":
            if len(self.anchors) and len(self.gaps) != len(self.anchors) - 1:
                raise InputError("a distance pattern needs one gap per consecutive anchor pair")
            if len(set(self.anchors)) != len(self.anchors):
                raise InputError("anchors must be distinct")
            for v in self.anchors:
                if not 0 <= v < n:
                    raise InputError(f"anchor {v} outside 0..{n - 1}")
            for d in self.gaps:
                if not 1 <= d <= n - 1:
                    raise InputError(f"gap {d} outside 1..{n - 1}")
        else:
            raise InputError(f"unknown constraint mode {self.mode!r}")


def _gap_windows(cs: ConstraintSet):
    """anchor -> list of (neighbour anchor, gap)."""
    links = {a: [] for a in cs.anchors}
    for i, d in enumerate(cs.gaps):
        a, b = cs.anchors[i], cs.anchors[i + 1]
        links[a].append((b, d))
        links[b].append((a, d))
    return links


def constrained_ham_path(
    g: SimpleGraph, cs: ConstraintSet | None = None, force: bool = False
) -> list[int] | None:
    """Hamiltonian path of g obeying cs, or None when there is none."""
    cs = cs or ConstraintSet.empty()
    cs.validate(g.n)
    if not force:
        check_guard(g.n, SOLVER_GUARD, "constrained Hamiltonian path search")
    n = g.n
    if n == 0:
        return None

    nbr = [0] * n
    for u in range(n):
        for v in g.adj[u]:
            nbr[u] |= 1 << v
    full = (1 << n) - 1

    absolute = dict(cs.absolute) if cs.mode == "absolute" else {}
    forced_at = {pos: v for v, pos in absolute.items()}
    links = _gap_windows(cs) if cs.mode == "gaps" else {}

    pos: dict[int, int] = {}
    path: list[int] = []

    def allowed(a: int, k: int):
        """Positions >= k still open to anchor a, or None when unconstrained."""
        spots = None
        for b, d in links[a]:
            if b in pos:
                cand = {pos[b] - d, pos[b] + d}
                spots = cand if spots is None else spots & cand
        if spots is None:
            return None
        return {s for s in spots if k <= s < n}

    def gap_ok(v: int, k: int) -> bool:
        for b, d in links.get(v, ()):
            if b in pos and abs(pos[b] - k) != d:
                return False
        return True

    def viable(visited: int, k: int) -> bool:
        # k is the index just filled; remaining path must cover the rest
        rest = full & ~visited
        if not rest:
            return True
        cur = path[-1]
        alive = rest | (1 << cur)
        # connectivity of the rest plus the current end
        seen = 1 << cur
        frontier = seen
        while frontier:
            grow = 0
            f = frontier
            while f:
                low = f & -f
                grow |= nbr[low.bit_length() - 1]
                f ^= low
            grow &= alive & ~seen
            seen |= grow
            frontier = grow
        if seen != alive:
            return False
        leaves = 0
        r = rest
        while r:
            low = r & -r
            u = low.bit_length() - 1
            deg = bin(nbr[u] & alive).count("1")
            if deg == 0:
                return False
            if deg == 1:
                leaves += 1
                if leaves > 1:
                    return False
            r ^= low
        for a in links:
            if a not in pos:
                spots = allowed(a, k + 1)
                if spots is not None and not spots:
                    return False
        for p_, v in forced_at.items():
            if p_ <= k and pos.get(v) != p_:
                return False
        return True

    def candidates(k: int, visited: int) -> list[int]:
        pool = full & ~visited if k == 0 else nbr[path[-1]] & ~visited
        if k in forced_at:
            v = forced_at[k]
            return [v] if pool >> v & 1 else []
        out = []
        must = None
        for a in links:
            if a not in pos:
                spots = allowed(a, k)
                if spots is not None and spots == {k}:
                    if must is not None and must != a:
                        return []
                    must = a
        if must is not None:
            return [must] if pool >> must & 1 else []
        while pool:
            low = pool & -pool
            v = low.bit_length() - 1
            pool ^= low
            if v in absolute:
                continue
            if v in links and not gap_ok(v, k):
                continue
            out.append(v)
        return out

    def extend(k: int, visited: int) -> bool:
        if k == n:
            return True
        for v in candidates(k, visited):
            path.append(v)
            pos[v] = k
            nv = visited | (1 << v)
            if viable(nv, k) and extend(k + 1, nv):
                return True
            path.pop()
            del pos[v]
        return False

    return list(path) if extend(0, 0) else None


@dataclass(frozen=True)
class Segment:
    kind: str  # "head", "internal", "tail" or "whole"
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def to_dict(self) -> dict:
        return {"kind": self.kind, "length": self.length, "vertices": list(self.vertices)}


def check_partial(g: SimpleGraph, pl: Mapping[int, int]) -> None:
    labels = {}
    for v, lab in pl.items():
        if not 0 <= v < g.n:
            raise InputError(f"labeled vertex {v} outside 0..{g.n - 1}")
        if not 0 <= lab < g.n:
            raise InputError(f"label {lab} of vertex {v} outside 0..{g.n - 1}")
        if lab in labels:
            raise InputError(f"vertices {labels[lab]} and {v} share label {lab}")
        labels[lab] = v
    for u, v in g.edges:
        if u in pl and v in pl and abs(pl[u] - pl[v]) < 2:
            raise InputError(f"adjacent vertices {u} and {v} carry labels {pl[u]} and {pl[v]}")


def lambda_violations(g: SimpleGraph, labels: Mapping[int, int]) -> list[tuple]:
    """All ways `labels` fails to be an injective lambda-labeling of g."""
    missing = [v for v in range(g.n) if v not in labels]
    if missing:
        raise InputError(f"vertices without a label: {missing}")
    out = []
    by_label = {}
    for v in range(g.n):
        lab = labels[v]
        if lab in by_label:
            out.append(("repeated", by_label[lab], v))
        else:
            by_label[lab] = v
    for u, v in g.sorted_edges():
        if abs(labels[u] - labels[v]) < 2:
            out.append(("adjacent", u, v))
    return out


def extend_partial(g: SimpleGraph, pl: Mapping[int, int], force: bool = False) -> dict[int, int] | None:
    """Extend a partial lambda-labeling to all of g with labels 0..n-1."""
    pl = {int(v): int(c) for v, c in pl.items()}
    check_partial(g, pl)
    path = constrained_ham_path(complement(g), ConstraintSet.positions(pl), force=force)
    if path is None:
        return None
    return {v: i for i, v in enumerate(path)}


def segment_decomposition(g: SimpleGraph, pl: Mapping[int, int], path: Sequence[int]) -> list[Segment]:
    """Split a consistent Hamiltonian path of the complement at the labeled vertices.

    Gives a head path of length c(v_1) ending at v_1, one path of length
    c(v_{i+1}) - c(v_i) between consecutive labeled vertices, and a tail of
    length n - c(v_t) - 1 starting at v_t.
    """
    n = g.n
    path = list(path)
    if sorted(path) != list(range(n)):
        raise InputError("path does not visit every vertex exactly once")
    for a, b in zip(path, path[1:]):
        if g.has_edge(a, b):
            raise InputError(f"consecutive vertices {a},{b} are adjacent in the graph")
    index = {v: i for i, v in enumerate(path)}
    for v, lab in pl.items():
        if index[v] != lab:
            raise InputError(f"vertex {v} sits at index {index[v]}, label says {lab}")

    if not pl:
        return [Segment("whole", tuple(path))]
    order = sorted(pl, key=pl.get)
    cuts = [pl[v] for v in order]
    segments = [Segment("head", tuple(path[: cuts[0] + 1]))]
    for lo, hi in zip(cuts, cuts[1:]):
        segments.append(Segment("internal", tuple(path[lo : hi + 1])))
    segments.append(Segment("tail", tuple(path[cuts[-1] :])))

    expected = [cuts[0]] + [b - a for a, b in zip(cuts, cuts[1:])] + [n - cuts[-1] - 1]
    if [s.length for s in segments] != expected:
        raise InputError("segment lengths disagree with the labels")
    for seg, (start, end) in zip(segments[1:-1], zip(order, order[1:])):
        if seg.vertices[0] != start or seg.vertices[-1] != end:
            raise InputError("internal segment endpoints disagree with the labels")
    return segments


def parse_graph(text: str) -> SimpleGraph:
    lines = _content_lines(text)
    if not lines:
        raise InputError("missing vertex count", line=1)
    lineno, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise InputError(f"vertex count must be an integer, got {first!r}", line=lineno) from None
    edges = []
    for lineno, content in lines[1:]:
        parts = content.split()
        if len(parts) != 2:
            raise InputError(f"edge line must be 'u v', got {content!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"non-integer vertex in {content!r}", line=lineno) from None
        if u == v:
            raise InputError(f"loop at vertex {u}", line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u},{v}) outside 0..{n - 1}", line=lineno)
        edges.append((u, v))
    return SimpleGraph.from_edges(n, edges)


def parse_partial(text: str) -> dict[int, int]:
    out = {}
    for lineno, content in _content_lines(text):
        parts = content.split()
        if len(parts) != 2:
            raise InputError(f"expected 'v label', got {content!r}", line=lineno)
        try:
            v, lab = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"non-integer entry in {content!r}", line=lineno) from None
        if v in out:
            raise InputError(f"vertex {v} labeled twice", line=lineno)
        out[v] = lab
    return out


def parse_constraints(text: str) -> ConstraintSet:
    absolute: dict[int, int] = {}
    anchors: list[int] = []
    gaps: list[int] = []
    mode = None
    for lineno, content in _content_lines(text):
        parts = content.split()
        kind = parts[0]
        if mode is not None and kind != mode:
            raise InputError("a constraint file holds either abs or gap lines, not both", line=lineno)
        try:
            nums = [int(x) for x in parts[1:]]
        except ValueError:
            raise InputError(f"non-integer entry in {content!r}", line=lineno) from None
        if kind == "abs":
            if len(nums) != 2:
                raise InputError("expected 'abs v pos'", line=lineno)
            v, p = nums
            if v in absolute:
                raise InputError(f"vertex {v} constrained twice", line=lineno)
            absolute[v] = p
        elif kind == "gap":
            if len(nums) != 3:
                raise InputError("expected 'gap u v d'", line=lineno)
            u, v, d = nums
            if not anchors:
                anchors.append(u)
            elif anchors[-1] != u:
                raise InputError(f"gap lines must chain: expected {anchors[-1]} first", line=lineno)
            anchors.append(v)
            gaps.append(d)
        else:
            raise InputError(f"unknown constraint kind {kind!r}", line=lineno)
        mode = kind
    if mode == "gap":
        return ConstraintSet.pattern(anchors, gaps)
    return ConstraintSet.positions(absolute)


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            out.append((lineno, content))
    return out
