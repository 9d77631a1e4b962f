import numpy as np
import pytest

from schubsing import (
    OracleCapError,
    Permutation,
    PermutationError,
    PreconditionError,
    SizeMismatchError,
    Transposition,
    apply_transposition,
    bruhat_leq,
    covers_down,
    identity,
    interval_below,
    length,
    longest,
    make_permutation,
    parse_permutation,
    rank_table,
)
from schubsing.perm import all_permutations, diagonal_symmetries, sn_tables

import naive

P = parse_permutation


class TestMakePermutation:
    def test_identity_word(self):
        w = make_permutation([1, 2, 3, 4])
        assert w.n == 4 and w == identity(4)

    def test_4231(self):
        assert make_permutation([4, 2, 3, 1]).word == (4, 2, 3, 1)

    @pytest.mark.parametrize("word,msg", [
        ([1, 1, 3], "duplicate"),
        ([1, 2, 4], "out of range"),
        ([0, 1], "out of range"),
        ([], "empty"),
        ([1, 2.0], "non-integer"),
        ([True, 2], "non-integer"),
    ])
    def test_rejects(self, word, msg):
        with pytest.raises(PermutationError, match=msg):
            make_permutation(word)

    def test_numpy_ints_accepted(self):
        assert make_permutation(np.array([2, 1])) == P("21")


class TestParse:
    @pytest.mark.parametrize("text", ["4231", "4,2,3,1", " 4 , 2,3 ,1 ", "[4,2,3,1]", "(4, 2, 3, 1)"])
    def test_forms(self, text):
        assert parse_permutation(text).word == (4, 2, 3, 1)

    def test_two_digit_values_need_commas(self):
        w = parse_permutation("10,1,2,3,4,5,6,7,8,9")
        assert w(1) == 10

    @pytest.mark.parametrize("text", ["", "  ", "4a31", "4,,1", "0", "42 31", "[]"])
    def test_malformed(self, text):
        with pytest.raises(PermutationError):
            parse_permutation(text)

    def test_round_trip_all_s5(self):
        for w in all_permutations(5):
            assert parse_permutation(str(w)) == w
            assert parse_permutation(f"[{w}]") == w

    def test_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            parse_permutation("11")


class TestRankTable:
    def test_identity_is_min(self):
        r = rank_table(identity(4))
        assert all(r[p, q] == min(p, q) for p in range(1, 5) for q in range(1, 5))

    def test_spot_value(self):
        assert rank_table(P("4231"))[2, 3] == 1

    def test_last_row_and_column(self):
        for w in all_permutations(4):
            r = rank_table(w)
            assert all(r[4, q] == q and r[q, 4] == q for q in range(1, 5))

    def test_matches_definition(self):
        for w in all_permutations(5):
            assert rank_table(w).values.tolist() == naive.rank_matrix(w.word)

    def test_out_of_range_cell(self):
        with pytest.raises(IndexError):
            rank_table(P("21"))[0, 1]

    def test_readonly_cache(self):
        r = rank_table(P("312"))
        with pytest.raises(ValueError):
            r.r[1, 1] = 5


class TestLength:
    @pytest.mark.parametrize("w,expected", [("1234", 0), ("4321", 6), ("4231", 5), ("3412", 4)])
    def test_examples(self, w, expected):
        assert length(P(w)) == expected

    def test_longest(self):
        for n in range(1, 8):
            assert length(longest(n)) == n * (n - 1) // 2


class TestBruhat:
    def test_identity_below_everything(self):
        for w in all_permutations(4):
            assert bruhat_leq(identity(4), w)

    def test_examples(self):
        assert bruhat_leq(P("2413"), P("4231"))
        assert not bruhat_leq(P("3412"), P("4231"))

    def test_against_definition_s4(self):
        ws = list(all_permutations(4))
        for v in ws:
            for w in ws:
                assert bruhat_leq(v, w) == naive.leq(v.word, w.word)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            bruhat_leq(P("21"), P("321"))


class TestTransposition:
    def test_examples(self):
        assert apply_transposition(P("2143"), Transposition(2, 3)) == P("2413")
        assert apply_transposition(P("1342"), Transposition(3, 4)) == P("1324")

    def test_involution(self):
        w = P("35142")
        for i in range(1, 6):
            for j in range(i + 1, 6):
                t = Transposition(i, j)
                assert apply_transposition(apply_transposition(w, t), t) == w

    @pytest.mark.parametrize("i,j", [(2, 2), (3, 1), (0, 2)])
    def test_bad_indices(self, i, j):
        with pytest.raises(PreconditionError):
            Transposition(i, j)

    def test_out_of_range(self):
        with pytest.raises(PreconditionError):
            apply_transposition(P("21"), Transposition(1, 3))


class TestIntervalAndCovers:
    def test_interval_identity(self):
        assert interval_below(identity(4)) == {identity(4)}

    def test_interval_longest(self):
        assert len(interval_below(longest(4))) == 24

    def test_interval_213(self):
        assert interval_below(P("213")) == {P("123"), P("213")}

    def test_interval_matches_filter(self):
        for w in all_permutations(4):
            expected = {Permutation(v) for v in naive.below(w.word)}
            assert interval_below(w) == expected

    def test_interval_cap(self):
        with pytest.raises(OracleCapError):
            interval_below(identity(9))

    def test_covers_identity(self):
        assert covers_down(identity(4)) == []

    def test_covers_21(self):
        assert covers_down(P("21")) == [(P("12"), Transposition(1, 2))]

    def test_covers_3412(self):
        got = covers_down(P("3412"))
        assert [str(t) for _, t in got] == ["(1,3)", "(1,4)", "(2,3)", "(2,4)"]

    def test_covers_brute_force(self):
        for w in all_permutations(5):
            lw = naive.length(w.word)
            expected = sorted(
                (i, j) for i in range(1, 6) for j in range(i + 1, 6)
                if naive.length(naive.swap(w.word, i, j)) == lw - 1
            )
            assert [(t.i, t.j) for _, t in covers_down(w)] == expected


class TestSymmetries:
    def test_identity(self):
        assert diagonal_symmetries(identity(4)) == (identity(4), identity(4))

    def test_4231_is_involution(self):
        assert diagonal_symmetries(P("4231"))[0] == P("4231")

    def test_3412_rotation_fixed(self):
        assert diagonal_symmetries(P("3412"))[1] == P("3412")

    def test_preserve_bruhat(self):
        ws = list(all_permutations(4))
        for v in ws:
            for w in ws:
                for s in (0, 1):
                    assert bruhat_leq(v, w) == bruhat_leq(diagonal_symmetries(v)[s], diagonal_symmetries(w)[s])


class TestSnTables:
    def test_lengths_and_order(self):
        tab = sn_tables(4)
        assert len(tab) == 24
        assert tab.words[0] == (1, 2, 3, 4) and tab.words[-1] == (4, 3, 2, 1)
        assert [int(x) for x in tab.lengths] == [naive.length(wd) for wd in tab.words]

    def test_below_mask(self):
        tab = sn_tables(4)
        k = tab.index[(4, 2, 3, 1)]
        got = {tab.words[x] for x in np.flatnonzero(tab.below_mask(k))}
        assert got == set(naive.below((4, 2, 3, 1)))
