"""Brute-force reference implementations.

These work on explicitly expanded graphs and know nothing about tallies,
deficits or toughness; tests compare the fast paths against them.  Every
routine has a size guard and raises GuardExceeded rather than truncating.
"""

from __future__ import annotations

from itertools import combinations
from typing import Hashable, Sequence

from ._guard import check_guard
from .exceptions import InputError
from .general import SimpleGraph
from .table import SkewTable

HAM_GUARD = 11
COVER_GUARD = 10
L21_GUARD = 9
TOUGH_GUARD = 12


class Expanded:
    """A graph on labelled vertices with bitmask adjacency."""

    def __init__(self, labels: Sequence[Hashable], nbr: Sequence[int]):
        self.labels = list(labels)
        self.nbr = list(nbr)
        self.n = len(self.labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}


def expand(graph) -> Expanded:
    """Expand a SkewTable (its skew graph) or wrap a SimpleGraph."""
    if isinstance(graph, Expanded):
        return graph
    if isinstance(graph, SkewTable):
        verts = list(graph.vertices())
        nbr = [0] * len(verts)
        for a, u in enumerate(verts):
            for b, v in enumerate(verts):
                if u.row != v.row and u.col != v.col:
                    nbr[a] |= 1 << b
        return Expanded(verts, nbr)
    if isinstance(graph, SimpleGraph):
        nbr = [0] * graph.n
        for u, v in graph.edges:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        return Expanded(range(graph.n), nbr)
    raise TypeError(f"cannot expand {type(graph).__name__}")


def line_graph(t: SkewTable) -> SimpleGraph:
    """L(H) for the bipartite multigraph H whose biadjacency matrix is t."""
    verts = list(t.vertices())
    edges = [
        (a, b)
        for (a, u), (b, v) in combinations(enumerate(verts), 2)
        if u.row == v.row or u.col == v.col
    ]
    return SimpleGraph.from_edges(len(verts), edges)


def to_simple(graph) -> tuple[SimpleGraph, list]:
    """SimpleGraph on 0..n-1 plus the original vertex labels."""
    e = expand(graph)
    edges = [(a, b) for a in range(e.n) for b in range(a + 1, e.n) if e.nbr[a] >> b & 1]
    return SimpleGraph.from_edges(e.n, edges), e.labels


def _start_index(e: Expanded, start) -> int:
    if start not in e.index:
        raise InputError(f"unknown start vertex {start}")
    return e.index[start]


def brute_ham_paths(graph, start=None) -> list[tuple]:
    """Every Hamiltonian path (as a vertex-label tuple), sorted.

    A path and its reverse are distinct entries.  With `start`, only paths
    beginning there.
    """
    e = expand(graph)
    check_guard(e.n, HAM_GUARD, "brute_ham_paths")
    if e.n == 0:
        return []
    starts = [_start_index(e, start)] if start is not None else range(e.n)
    full = (1 << e.n) - 1
    found = []
    path = []

    def rec(u: int, seen: int):
        if seen == full:
            found.append(tuple(e.labels[i] for i in path))
            return
        cand = e.nbr[u] & ~seen
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            path.append(v)
            rec(v, seen | low)
            path.pop()

    for s in starts:
        path.append(s)
        rec(s, 1 << s)
        path.pop()
    return sorted(found)


def brute_ham_path_exists(graph, start=None) -> bool:
    """Same search as brute_ham_paths, stopping at the first path."""
    e = expand(graph)
    check_guard(e.n, HAM_GUARD, "brute_ham_path_exists")
    if e.n == 0:
        return False
    starts = [_start_index(e, start)] if start is not None else range(e.n)
    full = (1 << e.n) - 1

    def rec(u: int, seen: int) -> bool:
        if seen == full:
            return True
        cand = e.nbr[u] & ~seen
        while cand:
            low = cand & -cand
            cand ^= low
            if rec(low.bit_length() - 1, seen | low):
                return True
        return False

    return any(rec(s, 1 << s) for s in starts)


def _pathable_subsets(e: Expanded) -> list[bool]:
    """pathable[mask]: the induced subgraph on mask has a Hamiltonian path."""
    size = 1 << e.n
    ends = [0] * size  # bitmask of possible path end vertices
    for v in range(e.n):
        ends[1 << v] = 1 << v
    for mask in range(1, size):
        em = ends[mask]
        if not em:
            continue
        while em:
            low = em & -em
            v = low.bit_length() - 1
            em ^= low
            ext = e.nbr[v] & ~mask
            while ext:
                lw = ext & -ext
                ext ^= lw
                ends[mask | lw] |= lw
    return [bool(x) for x in ends]


def brute_path_cover(graph) -> int:
    """Minimum number of vertex-disjoint paths covering every vertex.

    Iterative deepening on the number of paths over all vertex subsets that
    induce a traceable subgraph.
    """
    e = expand(graph)
    check_guard(e.n, COVER_GUARD, "brute_path_cover")
    if e.n == 0:
        return 0
    pathable = _pathable_subsets(e)
    full = (1 << e.n) - 1
    reach = {0}
    for k in range(1, e.n + 1):
        nxt = set()
        for mask in reach:
            rest = full & ~mask
            low = rest & -rest
            # the lowest uncovered vertex goes into the next path
            sub = rest
            while sub:
                if sub & low and pathable[sub]:
                    nxt.add(mask | sub)
                sub = (sub - 1) & rest
        if full in nxt:
            return k
        reach = nxt
    raise AssertionError("unreachable: singletons always cover")


def brute_longest_path(graph) -> int:
    """Edges on a longest path."""
    e = expand(graph)
    check_guard(e.n, COVER_GUARD, "brute_longest_path")
    if e.n == 0:
        raise InputError("the empty graph has no paths")
    pathable = _pathable_subsets(e)
    return max(bin(m).count("1") for m in range(1, 1 << e.n) if pathable[m]) - 1


def brute_components(graph) -> int:
    e = expand(graph)
    seen = 0
    comps = 0
    for s in range(e.n):
        if seen >> s & 1:
            continue
        comps += 1
        frontier = 1 << s
        seen |= frontier
        while frontier:
            grow = 0
            f = frontier
            while f:
                low = f & -f
                grow |= e.nbr[low.bit_length() - 1]
                f ^= low
            frontier = grow & ~seen
            seen |= frontier
    return comps


def _components_within(e: Expanded, alive: int) -> int:
    comps = 0
    left = alive
    while left:
        low = left & -left
        comps += 1
        seen = low
        frontier = low
        while frontier:
            grow = 0
            f = frontier
            while f:
                lw = f & -f
                grow |= e.nbr[lw.bit_length() - 1]
                f ^= lw
            frontier = grow & alive & ~seen
            seen |= frontier
        left &= ~seen
    return comps


def brute_pathwise_tough(graph) -> bool:
    """c(G - S) <= |S| + 1 for every vertex subset S."""
    e = expand(graph)
    check_guard(e.n, TOUGH_GUARD, "brute_pathwise_tough")
    full = (1 << e.n) - 1
    for s in range(1 << e.n):
        if _components_within(e, full & ~s) > bin(s).count("1") + 1:
            return False
    return True


def brute_tough_vertex(graph, v) -> bool:
    """The tough-vertex definition, checked over all subsets S of V - v."""
    e = expand(graph)
    check_guard(e.n, TOUGH_GUARD, "brute_tough_vertex")
    i = _start_index(e, v)
    full = (1 << e.n) - 1
    others = full & ~(1 << i)
    hood = e.nbr[i]
    sub = others
    while True:
        size = bin(sub).count("1")
        comps = _components_within(e, others & ~sub)
        if comps > size + 1:
            return False
        if hood & ~sub == 0 and comps > size:
            return False
        if sub == 0:
            return True
        sub = (sub - 1) & others


def _distance_two(e: Expanded) -> list[int]:
    far = []
    for v in range(e.n):
        two = 0
        nb = e.nbr[v]
        while nb:
            low = nb & -nb
            two |= e.nbr[low.bit_length() - 1]
            nb ^= low
        far.append(two & ~e.nbr[v] & ~(1 << v))
    return far


def _clique_number(e: Expanded) -> int:
    best = 0

    def grow(size: int, cand: int):
        nonlocal best
        best = max(best, size)
        while cand:
            if size + bin(cand).count("1") <= best:
                return
            low = cand & -cand
            cand ^= low
            grow(size + 1, cand & e.nbr[low.bit_length() - 1])

    grow(0, (1 << e.n) - 1)
    return best


def brute_l21(graph) -> int:
    """Minimum span of an L(2,1)-coloring, by branch and bound on the span.

    Starts from max(Delta + 1, 2(omega - 1)).  Vertices are colored
    most-constrained first.  Closed twins (same closed neighbourhood) can
    swap labels, so their labels are forced to increase with the index.
    """
    e = expand(graph)
    check_guard(e.n, L21_GUARD, "brute_l21")
    if e.n == 0:
        return 0
    far = _distance_two(e)
    adj = [[u for u in range(e.n) if e.nbr[v] >> u & 1] for v in range(e.n)]
    dist2 = [[u for u in range(e.n) if far[v] >> u & 1] for v in range(e.n)]
    closed = [e.nbr[v] | 1 << v for v in range(e.n)]
    below = [[u for u in range(v) if closed[u] == closed[v]] for v in range(e.n)]
    above = [[u for u in range(v + 1, e.n) if closed[u] == closed[v]] for v in range(e.n)]

    def feasible(span: int) -> bool:
        full = (1 << (span + 1)) - 1
        banned = [0] * e.n
        labels = [-1] * e.n

        def rec(done: int) -> bool:
            if done == e.n:
                return True
            v = min(
                (u for u in range(e.n) if labels[u] < 0),
                key=lambda u: bin(full & ~banned[u]).count("1"),
            )
            free = full & ~banned[v]
            lo = max((labels[u] for u in below[v] if labels[u] >= 0), default=-1)
            hi = min((labels[u] for u in above[v] if labels[u] >= 0), default=span + 1)
            free &= ((1 << hi) - 1) & ~((1 << (lo + 1)) - 1)
            while free:
                low = free & -free
                free ^= low
                lab = low.bit_length() - 1
                labels[v] = lab
                saved = [(u, banned[u]) for u in adj[v]] + [(u, banned[u]) for u in dist2[v]]
                near = (0b111 << lab) >> 1
                for u in adj[v]:
                    banned[u] |= near
                for u in dist2[v]:
                    banned[u] |= low
                if rec(done + 1):
                    return True
                for u, b in reversed(saved):
                    banned[u] = b
            labels[v] = -1
            return False

        return rec(0)

    max_deg = max(len(a) for a in adj)
    span = max(max_deg + 1 if max_deg else 0, 2 * (_clique_number(e) - 1))
    while not feasible(span):
        span += 1
    return span


def brute_lambda_rectangle(m: int, n: int) -> list[list[int]] | None:
    """First m x n array of 1..mn with same-row/column entries at least 2 apart.

    Fills values in increasing order: value k+1 may not share a row or a
    column with value k.
    """
    check_guard(m * n, 16, "brute_lambda_rectangle")
    if m < 1 or n < 1:
        raise InputError("rectangle dimensions must be positive")
    grid = [[0] * n for _ in range(m)]
    cells = [(i, j) for i in range(m) for j in range(n)]

    def place(value: int, prev) -> bool:
        if value > m * n:
            return True
        for i, j in cells:
            if grid[i][j]:
                continue
            if prev is not None and (prev[0] == i or prev[1] == j):
                continue
            grid[i][j] = value
            if place(value + 1, (i, j)):
                return True
            grid[i][j] = 0
        return False

    return [row[:] for row in grid] if place(1, None) else None


def brute_consistent_paths(graph, positions: dict) -> list[tuple]:
    """Hamiltonian paths placing each vertex of `positions` at its index."""
    return [
        p for p in brute_ham_paths(graph)
        if all(p[idx] == v for v, idx in positions.items())
    ]

