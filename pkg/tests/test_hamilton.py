import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewpath import oracle
from skewpath.exceptions import GuardExceeded, InputError
from skewpath.hamilton import (
    _State,
    boxcount_dp,
    check_path,
    consistent_skew_path,
    enumerate_ham_paths,
    ham_path_any,
    ham_path_from,
    longest_path,
    min_path_cover,
)
from skewpath.table import BoxVertex, SkewTable, remove_vertex
from skewpath.toughness import (
    deficit,
    is_path_start,
    is_pathwise_tough,
    max_path_length,
    path_cover_number,
)
from corpus import random_table, random_tables, small_tables

T = SkewTable.from_rows
SMALL = [t for t in small_tables() if t.n]


def ids(t):
    return str(t.counts)


def box_seq(path):
    return tuple(v.box for v in path)


class TestHamPathFrom:
    def test_sample_has_none(self, sample):
        assert ham_path_any(sample) is None
        assert all(ham_path_from(sample, v) is None for v in sample.vertices())

    def test_all_ones_two_by_two(self):
        assert ham_path_any(SkewTable.ones(2, 2)) is None

    def test_single_vertex(self):
        p = ham_path_any(T([[0, 1]]))
        assert p.vertices == (BoxVertex(0, 1, 0),)

    def test_empty(self):
        assert ham_path_any(T([[0, 0]])) is None

    def test_three_by_three(self):
        t = SkewTable.ones(3, 3)
        p = ham_path_from(t, BoxVertex(1, 1, 0))
        p.validate()
        assert p.vertices[0] == BoxVertex(1, 1, 0)

    def test_starts_at_requested_ordinal(self):
        t = T([[2, 0], [0, 1], [0, 1]])
        p = ham_path_from(t, BoxVertex(0, 0, 1))
        p.validate()
        assert p.vertices[0] == BoxVertex(0, 0, 1)

    @pytest.mark.parametrize("t", SMALL, ids=ids)
    def test_matches_search(self, t):
        for v in t.vertices():
            p = ham_path_from(t, v)
            assert (p is not None) == oracle.brute_ham_path_exists(t, v)
            if p is not None:
                p.validate()
                assert p.vertices[0] == v

    @pytest.mark.parametrize("t", SMALL, ids=ids)
    def test_any(self, t):
        p = ham_path_any(t)
        assert (p is not None) == bool(is_pathwise_tough(t))
        if p is not None:
            p.validate()

    def test_large_random(self):
        import random

        rng = random.Random(5)
        for _ in range(40):
            t = random_table(rng, max_vertices=60, max_dim=8)
            p = ham_path_any(t)
            assert (p is not None) == bool(is_pathwise_tough(t))
            if p is not None:
                p.validate()

    @given(st.integers(1, 7), st.integers(1, 7))
    @settings(max_examples=30, deadline=None)
    def test_all_ones(self, m, n):
        p = ham_path_any(SkewTable.ones(m, n))
        expect = (m, n) != (2, 2) and (m * n == 1 or min(m, n) >= 2)
        assert (p is not None) == expect

    def test_reversal_is_a_path(self):
        for t in random_tables(60, seed=3):
            p = ham_path_any(t)
            if p is not None:
                check_path(t, p.vertices[::-1])


class TestCheckPath:
    def test_rejects(self):
        t = SkewTable.ones(3, 3)
        with pytest.raises(InputError):
            check_path(t, [])
        with pytest.raises(InputError):
            check_path(t, [BoxVertex(0, 0, 0), BoxVertex(0, 1, 0)], hamiltonian=False)
        with pytest.raises(InputError):
            check_path(t, [BoxVertex(0, 0, 0), BoxVertex(1, 1, 0)])
        check_path(t, [BoxVertex(0, 0, 0), BoxVertex(1, 1, 0)], hamiltonian=False)


class TestState:
    """The incremental tallies must agree with recomputation from scratch."""

    @given(st.sampled_from(SMALL), st.randoms(use_true_random=False))
    @settings(max_examples=120)
    def test_removals(self, t, rnd):
        state = _State(t)
        cur = t
        removed = []
        while cur.n and rnd.random() < 0.8:
            box = rnd.choice(cur.nonempty_boxes())
            state.remove(*box)
            cur = remove_vertex(cur, BoxVertex(*box, cur[box] - 1))
            removed.append(box)
            assert state.n == cur.n
            assert state.pathwise_tough() == bool(is_pathwise_tough(cur))
            for b in cur.nonempty_boxes():
                assert state.start(b) == is_path_start(cur, BoxVertex(*b, 0))
        for box in reversed(removed):
            state.restore(*box)
        assert state.counts == [list(r) for r in t.counts]
        assert state.snapshot(t.cols) == t


class TestBoxcountDP:
    def test_example(self):
        t = T([[2, 0], [0, 1], [0, 1]])
        p = boxcount_dp(t, (0, 0))
        p.validate()
        assert len(p) == 4 and p.vertices[0] == BoxVertex(0, 0, 0)

    def test_box_plus(self):
        assert boxcount_dp(SkewTable.ones(2, 2), (0, 0)) is None

    def test_single(self):
        assert boxcount_dp(T([[1]]), (0, 0)).vertices == (BoxVertex(0, 0, 0),)

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            boxcount_dp(SkewTable.ones(3, 3), (0, 0))

    def test_bad_start(self):
        with pytest.raises(InputError):
            boxcount_dp(T([[1, 0]]), (0, 1))
        with pytest.raises(InputError):
            boxcount_dp(T([[1, 0]]), (2, 0))

    @pytest.mark.parametrize("t", [t for t in SMALL if len(t.nonempty_boxes()) <= 6], ids=ids)
    def test_agrees(self, t):
        for box in t.nonempty_boxes():
            p = boxcount_dp(t, box)
            assert (p is not None) == is_path_start(t, BoxVertex(*box, 0))
            if p is not None:
                p.validate()


class TestEnumerate:
    @pytest.mark.parametrize("t", [t for t in SMALL if t.n <= 7], ids=ids)
    def test_vertex_mode_matches_brute(self, t):
        for v in t.vertices():
            got = [p.vertices for p in enumerate_ham_paths(t, v)]
            assert len(got) == len(set(got))
            assert sorted(got) == oracle.brute_ham_paths(t, v)

    @pytest.mark.parametrize("t", [t for t in SMALL if t.n <= 7], ids=ids)
    def test_box_mode_matches_brute(self, t):
        for box in t.nonempty_boxes():
            v = BoxVertex(*box, 0)
            got = [box_seq(p) for p in enumerate_ham_paths(t, v, mode="boxes")]
            assert len(got) == len(set(got))
            assert set(got) == {box_seq(p) for p in oracle.brute_ham_paths(t, v)}

    def test_limit(self):
        t = SkewTable.ones(3, 3)
        v = BoxVertex(0, 0, 0)
        assert len(list(enumerate_ham_paths(t, v, limit=5))) == 5
        assert list(enumerate_ham_paths(t, v, limit=0)) == []

    def test_unknown_mode(self):
        with pytest.raises(InputError):
            list(enumerate_ham_paths(T([[1]]), BoxVertex(0, 0, 0), mode="edges"))

    def test_no_path_yields_nothing(self, sample):
        assert list(enumerate_ham_paths(sample, BoxVertex(1, 1, 0))) == []


class TestConsistent:
    def test_fixed_start_and_end(self):
        t = SkewTable.ones(3, 3)
        p = consistent_skew_path(t, {BoxVertex(0, 0, 0): 0, BoxVertex(2, 2, 0): 8})
        p.validate()
        assert p.vertices[0] == BoxVertex(0, 0, 0) and p.vertices[-1] == BoxVertex(2, 2, 0)

    def test_infeasible(self):
        # neighbours in the same row can never be consecutive
        t = SkewTable.ones(3, 3)
        assert consistent_skew_path(t, {BoxVertex(0, 0, 0): 3, BoxVertex(0, 1, 0): 4}) is None

    def test_bad_position(self):
        with pytest.raises(InputError):
            consistent_skew_path(SkewTable.ones(2, 3), {BoxVertex(0, 0, 0): 6})
        with pytest.raises(InputError):
            consistent_skew_path(
                SkewTable.ones(2, 3), {BoxVertex(0, 0, 0): 1, BoxVertex(1, 1, 0): 1}
            )

    def test_matches_brute(self):
        import random

        rng = random.Random(17)
        for t in random_tables(120, seed=23, max_vertices=7):
            verts = list(t.vertices())
            k = rng.randint(0, min(3, len(verts)))
            chosen = rng.sample(verts, k)
            pos = rng.sample(range(t.n), k)
            cons = dict(zip(chosen, pos))
            p = consistent_skew_path(t, cons)
            brute = oracle.brute_consistent_paths(t, cons)
            assert (p is not None) == bool(brute), (t.counts, cons)
            if p is not None:
                p.validate()
                assert all(p.vertices[i] == v for v, i in cons.items())


class TestCover:
    def test_sample(self, sample):
        cover = min_path_cover(sample)
        cover.validate()
        assert [len(p) for p in cover.paths] == [7, 1]

    def test_single_box(self):
        cover = min_path_cover(T([[3]]))
        assert [len(p) for p in cover.paths] == [1, 1, 1]

    def test_box_plus(self):
        cover = min_path_cover(T([[3, 0, 1], [0, 0, 0], [2, 0, 1]]))
        cover.validate()
        assert len(cover) == path_cover_number(T([[3, 0, 1], [0, 0, 0], [2, 0, 1]]))

    def test_empty(self):
        with pytest.raises(InputError):
            min_path_cover(T([[0]]))

    @pytest.mark.parametrize("t", SMALL, ids=ids)
    def test_minimum(self, t):
        cover = min_path_cover(t)
        cover.validate()
        assert len(cover) == path_cover_number(t)

    def test_random(self):
        for t in random_tables(200, seed=31, max_vertices=12):
            cover = min_path_cover(t)
            cover.validate()
            assert len(cover) == path_cover_number(t)

    def test_canonical_shape_when_possible(self):
        for t in SMALL:
            df = deficit(t).value
            if max_path_length(t) + 1 == t.n - df and path_cover_number(t) == df + 1:
                lengths = sorted((len(p) for p in min_path_cover(t).paths), reverse=True)
                assert lengths == [t.n - df] + [1] * df


class TestLongestPath:
    @pytest.mark.parametrize("t", SMALL, ids=ids)
    def test_length(self, t):
        p = longest_path(t)
        check_path(t, p, hamiltonian=False)
        assert len(p) - 1 == max_path_length(t)

    def test_counterexample_table(self):
        t = T([[0, 0, 0], [2, 0, 1], [2, 1, 0]])
        assert len(longest_path(t)) == 4
        assert oracle.brute_longest_path(t) == 3
