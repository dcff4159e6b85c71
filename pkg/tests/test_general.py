import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewpath import oracle
from skewpath.exceptions import GuardExceeded, InputError
from skewpath.general import (
    ConstraintSet,
    SimpleGraph,
    check_partial,
    complement,
    constrained_ham_path,
    extend_partial,
    lambda_violations,
    parse_constraints,
    parse_graph,
    parse_partial,
    segment_decomposition,
)

G = SimpleGraph.from_edges
K3 = G(3, [(0, 1), (1, 2), (0, 2)])
P3 = G(3, [(0, 1), (1, 2)])
C4 = G(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
C5 = G(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return G(n, edges)


class TestGraph:
    def test_normalises(self):
        g = G(3, [(1, 0), (0, 1)])
        assert g.sorted_edges() == [(0, 1)]
        assert g.has_edge(1, 0)

    def test_rejects(self):
        with pytest.raises(InputError):
            G(2, [(0, 0)])
        with pytest.raises(InputError):
            G(2, [(0, 2)])
        with pytest.raises(InputError):
            SimpleGraph(-1)

    def test_complement_examples(self):
        assert complement(K3).edges == frozenset()
        assert complement(P3).sorted_edges() == [(0, 2)]
        assert complement(C5).sorted_edges() == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]

    @given(graphs())
    def test_complement_involution(self, g):
        assert complement(complement(g)) == g
        assert len(g.edges) + len(complement(g).edges) == g.n * (g.n - 1) // 2


class TestConstraints:
    def test_validate(self):
        with pytest.raises(InputError):
            ConstraintSet.positions({0: 1, 1: 1}).validate(3)
        with pytest.raises(InputError):
            ConstraintSet.positions({0: 3}).validate(3)
        with pytest.raises(InputError):
            ConstraintSet.pattern([0, 1], []).validate(3)
        with pytest.raises(InputError):
            ConstraintSet.pattern([0, 1], [3]).validate(3)
        with pytest.raises(InputError):
            ConstraintSet.pattern([0, 0], [1]).validate(3)

    def test_reversed(self):
        cs = ConstraintSet.pattern([0, 1, 2], [1, 2]).reversed()
        assert cs.anchors == (2, 1, 0) and cs.gaps == (2, 1)


class TestConstrainedPath:
    def test_c5_complement(self):
        path = constrained_ham_path(complement(C5))
        assert path is not None
        assert all(not C5.has_edge(a, b) for a, b in zip(path, path[1:]))

    def test_absolute(self):
        path = constrained_ham_path(complement(C5), ConstraintSet.positions({0: 0, 2: 1}))
        assert path == [0, 2, 4, 1, 3]

    def test_empty_graph(self):
        assert constrained_ham_path(G(0, [])) is None

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            constrained_ham_path(G(19, []))

    def test_guard_env(self, monkeypatch):
        monkeypatch.setenv("SKEWPATH_GUARD", "25")
        path = [(i, i + 1) for i in range(18)]
        assert constrained_ham_path(G(19, path)) == list(range(19))

    @given(graphs(), st.randoms(use_true_random=False))
    @settings(max_examples=150, deadline=None)
    def test_absolute_matches_brute(self, g, rnd):
        k = rnd.randint(0, min(3, g.n))
        chosen = rnd.sample(range(g.n), k)
        spots = rnd.sample(range(g.n), k)
        cs = dict(zip(chosen, spots))
        path = constrained_ham_path(g, ConstraintSet.positions(cs))
        assert (path is not None) == bool(oracle.brute_consistent_paths(g, cs))
        if path is not None:
            assert all(path[i] == v for v, i in cs.items())

    @given(graphs(), st.randoms(use_true_random=False))
    @settings(max_examples=150, deadline=None)
    def test_gaps_match_brute(self, g, rnd):
        if g.n < 2:
            return
        k = rnd.randint(2, min(3, g.n))
        anchors = rnd.sample(range(g.n), k)
        gaps = [rnd.randint(1, g.n - 1) for _ in range(k - 1)]
        path = constrained_ham_path(g, ConstraintSet.pattern(anchors, gaps))

        def ok(p):
            where = {v: i for i, v in enumerate(p)}
            return all(abs(where[a] - where[b]) == d for a, b, d in zip(anchors, anchors[1:], gaps))

        assert (path is not None) == any(ok(p) for p in oracle.brute_ham_paths(g))
        if path is not None:
            assert ok(path)


class TestExtend:
    def test_examples(self):
        assert extend_partial(P3, {}) is None
        assert extend_partial(C4, {}) is None
        labels = extend_partial(C5, {})
        assert lambda_violations(C5, labels) == []
        assert sorted(labels.values()) == list(range(5))

    def test_respects_partial(self):
        labels = extend_partial(C5, {3: 0})
        assert labels[3] == 0
        assert lambda_violations(C5, labels) == []

    def test_invalid_partial(self):
        with pytest.raises(InputError):
            check_partial(C5, {0: 0, 1: 1})
        with pytest.raises(InputError):
            check_partial(C5, {0: 5})
        with pytest.raises(InputError):
            check_partial(C5, {0: 2, 2: 2})

    def test_random_against_brute(self):
        rng = random.Random(99)
        for _ in range(200):
            n = rng.randint(1, 6)
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            g = G(n, [e for e in pairs if rng.random() < 0.4])
            pl = {}
            for v in rng.sample(range(n), rng.randint(0, n)):
                lab = rng.randrange(n)
                if lab in pl.values() or any(
                    g.has_edge(u, v) and abs(c - lab) < 2 for u, c in pl.items()
                ):
                    continue
                pl[v] = lab
            labels = extend_partial(g, pl)
            brute = oracle.brute_consistent_paths(complement(g), pl)
            assert (labels is not None) == bool(brute)
            if labels is not None:
                assert lambda_violations(g, labels) == []
                assert all(labels[v] == c for v, c in pl.items())


class TestSegments:
    def test_c5_head_tail(self):
        segs = segment_decomposition(C5, {0: 0}, [0, 2, 4, 1, 3])
        assert [(s.kind, s.length) for s in segs] == [("head", 0), ("tail", 4)]

    def test_eight_vertices(self):
        g = G(8, [])
        segs = segment_decomposition(g, {2: 2, 5: 5}, list(range(8)))
        assert [s.length for s in segs] == [2, 3, 2]
        assert segs[1].vertices == (2, 3, 4, 5)

    def test_empty_partial(self):
        segs = segment_decomposition(C5, {}, [0, 2, 4, 1, 3])
        assert [(s.kind, s.length) for s in segs] == [("whole", 4)]

    def test_rejects(self):
        with pytest.raises(InputError):
            segment_decomposition(C5, {}, [0, 1, 2, 3, 4])
        with pytest.raises(InputError):
            segment_decomposition(C5, {0: 1}, [0, 2, 4, 1, 3])
        with pytest.raises(InputError):
            segment_decomposition(C5, {}, [0, 2, 4, 1])


class TestParsers:
    def test_graph(self):
        g = parse_graph("# c4\n4\n0 1\n1 2\n2 3 # last edge\n3 0\n")
        assert g == C4

    @pytest.mark.parametrize(
        "text, line",
        [("", 1), ("x\n", 1), ("3\n0\n", 2), ("3\n0 0\n", 2), ("3\n0 3\n", 2), ("3\n0 a\n", 2)],
    )
    def test_graph_errors(self, text, line):
        with pytest.raises(InputError) as err:
            parse_graph(text)
        assert err.value.line == line

    def test_partial(self):
        assert parse_partial("0 2\n3 0\n") == {0: 2, 3: 0}
        with pytest.raises(InputError):
            parse_partial("0 2\n0 3\n")
        with pytest.raises(InputError):
            parse_partial("0\n")

    def test_constraints(self):
        cs = parse_constraints("abs 1 1\nabs 8 3\n")
        assert cs.mode == "absolute" and cs.absolute == {1: 1, 8: 3}
        cs = parse_constraints("gap 0 1 2\ngap 1 4 1\n")
        assert cs.anchors == (0, 1, 4) and cs.gaps == (2, 1)
        assert parse_constraints("").absolute == {}

    @pytest.mark.parametrize(
        "text",
        ["abs 1 1\ngap 0 1 2\n", "gap 0 1 2\ngap 2 3 1\n", "abs 1\n", "pin 1 2\n", "abs 1 x\n"],
    )
    def test_constraint_errors(self, text):
        with pytest.raises(InputError):
            parse_constraints(text)
