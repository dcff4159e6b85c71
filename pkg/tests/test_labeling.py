import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewpath import oracle
from skewpath.exceptions import InputError
from skewpath.hamilton import HamPath, ham_path_any, min_path_cover
from skewpath.labeling import (
    LambdaRectangle,
    Labeling,
    best_l21,
    iter_lambda_rectangles,
    l21_from_cover,
    l21_span,
    lambda_from_path,
    lambda_rectangle,
    validate_labeling,
)
from skewpath.table import BoxVertex, SkewTable
from skewpath.toughness import path_cover_number
from corpus import random_tables, small_tables

T = SkewTable.from_rows
V = BoxVertex


class TestLambdaFromPath:
    def test_single(self):
        lab = lambda_from_path(HamPath(T([[1]]), (V(0, 0, 0),)))
        assert lab.assignment == {V(0, 0, 0): 0} and lab.span == 0

    def test_two_by_three(self):
        t = SkewTable.ones(2, 3)
        lab = lambda_from_path(ham_path_any(t))
        assert sorted(lab.assignment.values()) == list(range(6))
        assert validate_labeling(t, lab) == []

    def test_two_vertices(self):
        t = T([[1, 0], [0, 1]])
        lab = lambda_from_path(ham_path_any(t))
        assert sorted(lab.assignment.values()) == [0, 1]
        assert validate_labeling(t, lab) == []

    def test_invalid_path(self):
        t = T([[2]])
        with pytest.raises(InputError):
            lambda_from_path(HamPath(t, (V(0, 0, 0), V(0, 0, 1))))


class TestL21:
    def test_sample(self, sample):
        lab = l21_from_cover(min_path_cover(sample))
        assert lab.span == 8
        assert validate_labeling(sample, lab) == []
        assert l21_span(sample) == (8, True)

    def test_hamiltonian(self):
        t = SkewTable.ones(3, 3)
        lab = l21_from_cover(min_path_cover(t))
        assert lab.span == 8
        assert l21_span(t) == (8, False)

    def test_two_singletons(self):
        lab = l21_from_cover(min_path_cover(T([[2]])))
        assert sorted(lab.assignment.values()) == [0, 2]

    def test_triangle(self):
        assert l21_span(T([[3]])) == (4, True)
        assert oracle.brute_l21(oracle.line_graph(T([[3]]))) == 4

    def test_empty(self):
        with pytest.raises(InputError):
            l21_span(T([[0]]))

    @pytest.mark.parametrize(
        "t", [t for t in small_tables() if 0 < t.n <= 7], ids=lambda t: str(t.counts)
    )
    def test_best_is_valid(self, t):
        lab, span = best_l21(t)
        assert validate_labeling(t, lab) == []
        assert lab.span == span.value
        if span.exact:
            assert oracle.brute_l21(oracle.line_graph(t)) == span.value
        else:
            assert oracle.brute_l21(oracle.line_graph(t)) <= span.value

    def test_exact_branch_random(self):
        for t in random_tables(60, seed=41, max_vertices=8):
            if path_cover_number(t) >= 2:
                assert oracle.brute_l21(oracle.line_graph(t)) == l21_span(t).value


class TestValidate:
    def test_same_row_consecutive(self):
        t = T([[1, 1]])
        lab = Labeling({V(0, 0, 0): 0, V(0, 1, 0): 1}, "lambda")
        assert [x.kind for x in validate_labeling(t, lab)] == ["adjacent"]

    def test_distance_two_repeat(self):
        # (0,0) and (1,1) meet through box (0,1)
        t = T([[1, 1], [0, 1]])
        lab = Labeling({V(0, 0, 0): 0, V(1, 1, 0): 0, V(0, 1, 0): 2}, "l21")
        assert [x.kind for x in validate_labeling(t, lab)] == ["distance-2"]

    def test_repeat_in_lambda_mode(self):
        t = T([[1, 0], [0, 1]])
        lab = Labeling({V(0, 0, 0): 3, V(1, 1, 0): 3}, "lambda")
        assert [x.kind for x in validate_labeling(t, lab)] == ["repeated"]

    def test_missing_and_bad(self):
        t = T([[1, 1]])
        with pytest.raises(InputError):
            validate_labeling(t, Labeling({V(0, 0, 0): 0}))
        with pytest.raises(InputError):
            Labeling({V(0, 0, 0): -1})
        with pytest.raises(InputError):
            Labeling({}, "l31")

    @given(st.lists(st.integers(0, 6), min_size=4, max_size=4))
    @settings(max_examples=80)
    def test_agrees_with_pairwise_check(self, labels):
        t = T([[1, 1], [1, 1]])
        verts = list(t.vertices())
        lab = Labeling(dict(zip(verts, labels)), "l21")
        g = oracle.line_graph(t)
        far = oracle._distance_two(oracle.expand(g))
        bad = 0
        for a in range(4):
            for b in range(a + 1, 4):
                gap = abs(labels[a] - labels[b])
                if g.has_edge(a, b) and gap < 2:
                    bad += 1
                elif far[a] >> b & 1 and gap < 1:
                    bad += 1
        assert len(validate_labeling(t, lab)) == bad


class TestRectangles:
    @pytest.mark.parametrize("m", range(1, 5))
    @pytest.mark.parametrize("n", range(1, 5))
    def test_existence(self, m, n):
        rect = lambda_rectangle(m, n)
        assert (rect is not None) == (oracle.brute_lambda_rectangle(m, n) is not None)
        if rect is not None:
            rect.validate()

    def test_examples(self):
        assert lambda_rectangle(2, 2) is None
        assert lambda_rectangle(1, 3) is None
        assert lambda_rectangle(1, 1).rows == ((1,),)
        lambda_rectangle(3, 3).validate()

    def test_bad_dims(self):
        with pytest.raises(InputError):
            lambda_rectangle(0, 3)

    def test_enumeration(self):
        rects = list(iter_lambda_rectangles(2, 3))
        assert len(rects) == len({r.rows for r in rects}) == 12
        for r in rects:
            r.validate()
        assert len(list(iter_lambda_rectangles(3, 3, limit=7))) == 7
        assert list(iter_lambda_rectangles(2, 2)) == []

    def test_validate_rejects(self):
        with pytest.raises(InputError):
            LambdaRectangle(((1, 2), (3, 4))).validate()
        with pytest.raises(InputError):
            LambdaRectangle(((1, 1), (3, 4))).validate()

    def test_text(self):
        assert LambdaRectangle(((1, 3), (4, 2))).to_text() == "1 3\n4 2\n"
