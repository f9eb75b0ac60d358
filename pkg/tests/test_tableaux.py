from collections import Counter
from itertools import permutations

import pytest

from catalan_blocks.catalan import ballot
from catalan_blocks.perm_core import Permutation, avoids, des_set, identity, inverse
from catalan_blocks.tableaux import (
    Shape, SizeGuardError, SkewShape, StandardTableau, partitions, rotate_180, rsk,
    rsk_inverse, syt_count, syt_enumerate, tab_des, tab_first_descent, tab_ldes,
)

import oracles

S321 = Permutation((3, 2, 1))


def two_row_skews(n):
    for a in range(n + 1):
        for b in range(a + 1):
            for c in range(a + 1):
                for d in range(min(b, c) + 1):
                    yield SkewShape(Shape((a, b)), Shape((c, d)))


class TestShapes:
    def test_partition_validation(self):
        with pytest.raises(ValueError):
            Shape((2, 3))
        assert Shape((3, 1, 0)).parts == (3, 1)

    def test_skew_validation(self):
        with pytest.raises(ValueError):
            SkewShape(Shape((2,)), Shape((3,)))

    def test_parse(self):
        s = SkewShape.parse("(6,4)/(5,2)")
        assert s.outer == Shape((6, 4)) and s.inner == Shape((5, 2)) and s.size == 3
        assert str(s) == "(6,4)/(5,2)"

    def test_partitions(self):
        assert [p.parts for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        assert [len(partitions(n)) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


class TestTableau:
    def test_parse_and_validate(self):
        t = StandardTableau.parse("1 2 3 4 7 / 5 6")
        assert t.shape.outer == Shape((5, 2))
        assert str(t) == "1 2 3 4 7 / 5 6"
        with pytest.raises(ValueError):
            StandardTableau.parse("1 4 / 2 3")  # 3 sits below 4
        with pytest.raises(ValueError):
            StandardTableau.parse("2 1")

    def test_descents(self):
        t = StandardTableau.parse("1 2 3 4 7 / 5 6")
        assert list(tab_des(t)) == [4] and tab_ldes(t) == 4
        t = StandardTableau.parse("1 2 3 6 7 / 4 5")
        assert list(tab_des(t)) == [3] and tab_first_descent(t) == 3
        row = StandardTableau.parse("1 2 3 4")
        assert len(tab_des(row)) == 0 and tab_ldes(row) == 0 and tab_first_descent(row) == 4


class TestEnumeration:
    def test_example_skew(self):
        got = [t.rows for t in syt_enumerate(SkewShape.parse("(6,4)/(5,2)"))]
        assert len(got) == 3

    def test_single_row(self):
        for n in range(6):
            assert syt_count(Shape((n,))) == 1

    def test_order_is_lexicographic_reading_word(self):
        words = [t.reading_word() for t in syt_enumerate(Shape((3, 2, 1)))]
        assert words == sorted(words) and len(set(words)) == len(words)

    @pytest.mark.parametrize("n", range(1, 10))
    def test_straight_counts_match_hook_formula(self, n):
        for lam in partitions(n):
            assert syt_count(lam) == oracles.hook_count(lam.parts)

    def test_two_row_counts_are_ballot_numbers(self):
        for n in range(1, 11):
            for k in range(1, n + 1):
                assert syt_count(Shape((n - 1, n - k))) == ballot(n, k)

    def test_skew_counts_against_brute_force(self):
        for s in two_row_skews(5):
            if s.size <= 7:
                assert syt_count(s) == oracles.skew_count(s.outer.parts, s.inner.parts), s
        s = SkewShape(Shape((3, 2, 2)), Shape((1, 1)))
        assert syt_count(s) == oracles.skew_count((3, 2, 2), (1, 1))

    def test_every_output_is_standard(self):
        for t in syt_enumerate(SkewShape(Shape((4, 3, 1)), Shape((2,)))):
            StandardTableau(t.shape, t.rows)  # re-validates

    def test_size_guard(self):
        with pytest.raises(SizeGuardError):
            next(syt_enumerate(Shape((26,))))


class TestRotation:
    def test_example(self):
        s = rotate_180(SkewShape.parse("(6,4)/(5,2)"), 7)
        assert s == SkewShape.parse("(5,2)/(3,1)")

    def test_involution_and_size(self):
        for s in two_row_skews(7):
            r = rotate_180(s, 7)
            assert rotate_180(r, 7) == s and r.size == s.size

    @pytest.mark.parametrize("n", range(1, 9))
    def test_preserves_count(self, n):
        for s in two_row_skews(n):
            assert syt_count(s) == syt_count(rotate_180(s, n))

    def test_rejects_three_rows(self):
        with pytest.raises(ValueError):
            rotate_180(SkewShape(Shape((2, 1, 1))), 3)


class TestDescentDuality:
    @pytest.mark.parametrize("n", range(2, 10))
    def test_first_last_descent(self, n):
        for m in range(1, n // 2 + 1):
            tabs = list(syt_enumerate(Shape((n - m, m))))
            first = Counter(tab_first_descent(t) for t in tabs)
            last = Counter(tab_ldes(t) for t in tabs)
            for k in range(1, n):
                assert first[k] == last[n - k]

    @pytest.mark.parametrize("n", range(2, 10))
    def test_skew_count_is_first_descent_count(self, n):
        for k in range(1, n):
            for m in range(1, min(n - k, n // 2) + 1):
                skew = SkewShape(Shape((n - 1, n - k)), Shape((n - m, m)))
                first = sum(1 for t in syt_enumerate(Shape((n - m, m))) if tab_first_descent(t) == k)
                assert syt_count(skew) == first


class TestRSK:
    def test_identity(self):
        P, Q = rsk(identity(5))
        assert P.rows == Q.rows == ((1, 2, 3, 4, 5),)
        assert rsk_inverse(P, Q) == identity(5)

    def test_decreasing(self):
        P, Q = rsk(S321)
        assert P.rows == ((1,), (2,), (3,))

    @pytest.mark.parametrize("n", range(7))
    def test_roundtrip_and_injective(self, n):
        seen = set()
        for w in permutations(range(1, n + 1)):
            p = Permutation(w)
            P, Q = rsk(p)
            assert P.shape == Q.shape
            assert rsk_inverse(P, Q) == p
            seen.add((P.rows, Q.rows))
        assert len(seen) == len(list(permutations(range(n))))

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            rsk_inverse(StandardTableau.parse("1 2"), StandardTableau.parse("1 / 2"))

    def test_knuth_classes_partition(self):
        n = 6
        classes = {}
        for w in permutations(range(1, n + 1)):
            P, _ = rsk(Permutation(w))
            classes.setdefault(P.rows, []).append(w)
        assert sum(map(len, classes.values())) == 720
        # class of P has |SYT(shape(P))| members
        for rows, members in classes.items():
            assert len(members) == oracles.hook_count(tuple(len(r) for r in rows))

    def test_descents_and_height_over_s7(self):
        for w in permutations(range(1, 8)):
            p = Permutation(w)
            P, Q = rsk(p)
            assert tab_des(P) == des_set(inverse(p))
            assert tab_des(Q) == des_set(p)
            assert (P.height < 3) == avoids(p, S321)
