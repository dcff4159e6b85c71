"""Labelings of L(H) built from paths and covers of the skew graph.

Two vertices of the skew graph are adjacent exactly when they are not
adjacent in L(H), so consecutive path vertices may take consecutive labels.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Mapping, NamedTuple

from .exceptions import InputError
from .hamilton import HamPath, PathCover, enumerate_ham_paths, ham_path_any, min_path_cover
from .table import BoxVertex, SkewTable
from .toughness import path_cover_number

MODES = ("lambda", "l21")


@dataclass(frozen=True)
class Labeling:
    assignment: Mapping[BoxVertex, int]
    mode: str = "l21"

    def __post_init__(self):
        if self.mode not in MODES:
            raise InputError(f"unknown labeling mode {self.mode!r}")
        if any(x < 0 for x in self.assignment.values()):
            raise InputError("labels must be non-negative")

    @property
    def span(self) -> int:
        return max(self.assignment.values(), default=0)

    def to_text(self) -> str:
        return "".join(f"{v} {lab}\n" for v, lab in sorted(self.assignment.items()))

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "span": self.span,
            "labels": [{"vertex": str(v), "label": lab} for v, lab in sorted(self.assignment.items())],
        }


class Violation(NamedTuple):
    u: BoxVertex
    v: BoxVertex
    kind: str  # "adjacent", "distance-2" or "repeated"


class L21Span(NamedTuple):
    value: int
    exact: bool


def lambda_from_path(path: HamPath) -> Labeling:
    path.validate()
    return Labeling({v: i for i, v in enumerate(path.vertices)}, "lambda")


def l21_from_cover(cover: PathCover) -> Labeling:
    """Label along each path in turn, skipping one integer between paths."""
    cover.validate()
    labels = {}
    nxt = 0
    for p in cover.paths:
        for v in p:
            labels[v] = nxt
            nxt += 1
        nxt += 1
    return Labeling(labels, "l21")


def l21_span(t: SkewTable) -> L21Span:
    """lambda_{2,1}(L(H)): exact when the skew graph needs two or more paths.

    With a Hamiltonian path (one path) n - 1 is only an upper bound.
    """
    if t.n == 0:
        raise InputError("the empty table has no labeling")
    r = path_cover_number(t)
    if r >= 2:
        return L21Span(t.n + r - 2, True)
    return L21Span(t.n - 1, False)


def best_l21(t: SkewTable) -> tuple[Labeling, L21Span]:
    """The cover-based coloring together with its span verdict."""
    lab = l21_from_cover(min_path_cover(t))
    return lab, l21_span(t)


def _distance_two(t: SkewTable, u: BoxVertex, v: BoxVertex) -> bool:
    # different row and column, joined through box (u.row, v.col) or (v.row, u.col)
    return t[u.row, v.col] > 0 or t[v.row, u.col] > 0


def validate_labeling(t: SkewTable, lab: Labeling) -> list[Violation]:
    """Every pair breaking the labeling rules for L(H); empty when valid.

    Only pairs whose labels differ by at most one can break a rule, so the
    check walks label buckets rather than all pairs.
    """
    missing = [v for v in t.vertices() if v not in lab.assignment]
    if missing:
        raise InputError(f"vertex {missing[0]} has no label")
    for v in lab.assignment:
        t.check_vertex(v)

    buckets: dict[int, list[BoxVertex]] = defaultdict(list)
    for v, x in lab.assignment.items():
        buckets[x].append(v)
    out = []
    for x in sorted(buckets):
        group = sorted(buckets[x])
        for a, u in enumerate(group):
            for v in group[a + 1:]:
                if u.row == v.row or u.col == v.col:
                    out.append(Violation(u, v, "adjacent"))
                elif lab.mode == "lambda":
                    out.append(Violation(u, v, "repeated"))
                elif _distance_two(t, u, v):
                    out.append(Violation(u, v, "distance-2"))
            for v in sorted(buckets.get(x + 1, ())):
                if u.row == v.row or u.col == v.col:
                    out.append(Violation(u, v, "adjacent"))
    return out


@dataclass(frozen=True)
class LambdaRectangle:
    """An m x n array of 1..mn; same-row and same-column entries differ by >= 2."""

    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_path(cls, m: int, n: int, vertices) -> "LambdaRectangle":
        grid = [[0] * n for _ in range(m)]
        for pos, v in enumerate(vertices, start=1):
            grid[v.row][v.col] = pos
        return cls(tuple(tuple(r) for r in grid))

    def validate(self) -> None:
        m = len(self.rows)
        n = len(self.rows[0]) if m else 0
        if sorted(x for r in self.rows for x in r) != list(range(1, m * n + 1)):
            raise InputError("entries are not a permutation of 1..mn")
        lines = list(self.rows) + [tuple(r[j] for r in self.rows) for j in range(n)]
        for line in lines:
            s = sorted(line)
            if any(b - a < 2 for a, b in zip(s, s[1:])):
                raise InputError(f"entries {line} contain a clash")

    def to_text(self) -> str:
        return "".join(" ".join(str(x) for x in r) + "\n" for r in self.rows)


def _check_dims(m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise InputError("rectangle dimensions must be positive")


def lambda_rectangle(m: int, n: int) -> LambdaRectangle | None:
    """Some m x n lambda-rectangle, or None (1 x k, k x 1 for k >= 2, and 2 x 2)."""
    _check_dims(m, n)
    path = ham_path_any(SkewTable.ones(m, n))
    return None if path is None else LambdaRectangle.from_path(m, n, path.vertices)


def iter_lambda_rectangles(m: int, n: int, limit: int | None = None) -> Iterator[LambdaRectangle]:
    """Every m x n lambda-rectangle, one per Hamiltonian path of the all-ones table."""
    _check_dims(m, n)
    t = SkewTable.ones(m, n)
    count = 0
    for v in t.vertices():
        for p in enumerate_ham_paths(t, v, mode="boxes"):
            if limit is not None and count >= limit:
                return
            yield LambdaRectangle.from_path(m, n, p.vertices)
            count += 1
