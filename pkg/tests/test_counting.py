"""The 0-1 matrix counts: brute-force oracle, dynamic program, Gale-Ryser."""

import pytest
from hypothesis import given, settings

from bipart import (
    CountingMemo,
    LimitError,
    Partition,
    gale_ryser_feasible,
    partitions_of,
    s_bruteforce,
    s_count,
)
from helpers import partitions

P = Partition

# Frozen expected values.  Each was computed with the enumeration oracle
# before the dynamic program existed; both routes must reproduce them.
KNOWN_COUNTS = [
    ((1, 1), (1, 1), 2),        # the two 2x2 permutation matrices
    ((2, 1), (2, 1), 1),        # rows forced by the column sums
    ((3, 1), (2, 1, 1), 1),     # conjugate pair
    ((2,), (2,), 0),            # a single cell cannot hold 2
    ((2, 1, 1), (2, 1, 1), 5),
    ((1, 1, 1), (2, 1), 3),
    ((2, 1), (1, 1, 1), 3),
    ((1, 1, 1), (1, 1, 1), 6),  # 3x3 permutation matrices
    ((2, 2), (2, 1, 1), 2),
    ((), (), 1),                # the empty matrix
]


class TestKnownValues:
    @pytest.mark.parametrize("a,b,expected", KNOWN_COUNTS)
    def test_bruteforce(self, a, b, expected):
        assert s_bruteforce(P(a), P(b)) == expected

    @pytest.mark.parametrize("a,b,expected", KNOWN_COUNTS)
    def test_dynamic_program(self, a, b, expected):
        assert s_count(P(a), P(b)) == expected

    def test_unequal_weights_count_zero(self):
        assert s_bruteforce(P((2, 1)), P((2,))) == 0
        assert s_count(P((2, 1)), P((2,))) == 0
        assert s_count(P(), P((1,))) == 0


class TestBruteForceGuard:
    def test_refuses_large_grids(self):
        nine = P((1,) * 9)
        with pytest.raises(LimitError):
            s_bruteforce(nine, nine)

    def test_limit_is_configurable(self):
        nine = P((1,) * 9)
        assert s_bruteforce(nine, nine, cell_limit=81) == 362880  # 9!

    def test_weight_mismatch_short_circuits_before_guard(self):
        # 20x5 grid would exceed the cell limit, but the weights differ
        assert s_bruteforce(P((20,) * 20), P((1, 1, 1, 1, 1))) == 0


class TestOracleEquivalence:
    def test_all_pairs_up_to_6(self):
        memo = {}
        for n in range(7):
            ps = partitions_of(n)
            for a in ps:
                for b in ps:
                    assert s_count(a, b, memo) == s_bruteforce(a, b)

    @given(partitions(max_part=4, max_len=4), partitions(max_part=4, max_len=4))
    @settings(max_examples=200)
    def test_random_pairs(self, a, b):
        assert s_count(a, b) == s_bruteforce(a, b, cell_limit=256)


class TestProperties:
    def test_symmetry_up_to_10(self):
        memo = {}
        for n in range(11):
            ps = partitions_of(n)
            for a in ps:
                for b in ps:
                    assert s_count(a, b, memo) == s_count(b, a, memo)

    def test_conjugate_diagonal_is_one_up_to_12(self):
        memo = {}
        for n in range(13):
            for a in partitions_of(n):
                assert s_count(a, a.transpose(), memo) == 1

    def test_support_is_gale_ryser_up_to_10(self):
        memo = {}
        for n in range(11):
            ps = partitions_of(n)
            for a in ps:
                for b in ps:
                    assert (s_count(a, b, memo) > 0) == gale_ryser_feasible(a, b)


class TestGaleRyser:
    def test_examples(self):
        assert gale_ryser_feasible(P((3, 1)), P((2, 1, 1)))
        assert not gale_ryser_feasible(P((2,)), P((2,)))
        assert gale_ryser_feasible(P((2, 2)), P((2, 1, 1)))

    def test_unequal_weights_infeasible(self):
        assert not gale_ryser_feasible(P((2,)), P((1,)))

    def test_empty_is_feasible(self):
        assert gale_ryser_feasible(P(), P())


class TestMemoSharing:
    def test_shared_table_reuses_work(self):
        memo = CountingMemo()
        first = s_count(P((3, 2, 1)), P((3, 2, 1)), memo)
        misses_after_first = memo.misses
        second = s_count(P((3, 2, 1)), P((3, 2, 1)), memo)
        assert first == second
        assert memo.misses == misses_after_first  # pure hits on repeat
        assert memo.hits > 0

    def test_shared_table_matches_private_tables(self):
        shared = {}
        for n in range(9):
            ps = partitions_of(n)
            for a in ps:
                for b in ps:
                    assert s_count(a, b, shared) == s_count(a, b)

    def test_hit_rate_bounds(self):
        memo = CountingMemo()
        assert memo.hit_rate == 0.0
        s_count(P((2, 2, 1)), P((2, 2, 1)), memo)
        assert 0.0 <= memo.hit_rate <= 1.0
