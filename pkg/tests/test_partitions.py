"""Partition generation, conjugation, dominance and the canonical order."""

import pytest
from hypothesis import given, settings

from bipart import (
    Composition,
    LimitError,
    Partition,
    PartitionOrder,
    PartitionParseError,
    WeightMismatchError,
    canonical_key,
    dominance_covers,
    dominates,
    format_partition,
    parse_partition,
    partitions_of,
    transpose,
)
from helpers import covers_by_transitive_reduction, partition_counts, partitions


class TestPartitionType:
    def test_valid_construction(self):
        p = Partition((3, 2, 2, 1))
        assert p.parts == (3, 2, 2, 1)
        assert p.n == 8
        assert len(p) == 4
        assert list(p) == [3, 2, 2, 1]
        assert p[0] == 3

    def test_empty_partition_has_weight_zero(self):
        assert Partition().n == 0
        assert Partition().parts == ()

    def test_rejects_increasing_parts(self):
        with pytest.raises(ValueError):
            Partition((1, 3))

    @pytest.mark.parametrize("bad", [0, -1, 2.5, "3", True])
    def test_rejects_non_positive_or_non_int_parts(self, bad):
        with pytest.raises((ValueError, TypeError)):
            Partition((bad,))

    def test_value_semantics(self):
        assert Partition((2, 1)) == Partition([2, 1])
        assert hash(Partition((2, 1))) == hash(Partition((2, 1)))
        assert Partition((2, 1)) != Partition((3,))

    def test_str_forms(self):
        assert str(Partition((3, 1))) == "(3,1)"
        assert str(Partition()) == "()"


class TestGeneration:
    def test_weight_zero_is_the_empty_partition(self):
        assert partitions_of(0) == [Partition()]

    def test_weight_three_exhaustive(self):
        assert partitions_of(3) == [
            Partition((3,)),
            Partition((2, 1)),
            Partition((1, 1, 1)),
        ]

    def test_p5_equals_seven(self):
        # derived by brute-force enumeration
        assert len(partitions_of(5)) == 7

    def test_counts_match_pentagonal_recurrence_up_to_40(self):
        expected = partition_counts(40)
        for n in range(41):
            assert len(partitions_of(n)) == expected[n]

    def test_no_duplicates_and_correct_weights(self):
        for n in range(13):
            ps = partitions_of(n)
            assert len(set(ps)) == len(ps)
            assert all(p.n == n for p in ps)

    def test_guard(self):
        with pytest.raises(LimitError):
            partitions_of(41)
        assert len(partitions_of(41, max_n=None)) == partition_counts(41)[41]
        with pytest.raises(ValueError):
            partitions_of(-1)


class TestTranspose:
    def test_single_row(self):
        assert Partition((4,)).transpose() == Partition((1, 1, 1, 1))

    def test_self_conjugate(self):
        assert Partition((2, 2)).transpose() == Partition((2, 2))

    def test_column_counts(self):
        assert Partition((3, 1)).transpose() == Partition((2, 1, 1))

    def test_empty(self):
        assert Partition().transpose() == Partition()

    def test_module_level_alias(self):
        assert transpose(Partition((3, 1))) == Partition((2, 1, 1))

    def test_involution_up_to_20(self):
        for n in range(21):
            for p in partitions_of(n):
                assert p.transpose().transpose() == p


class TestDominance:
    def test_examples(self):
        assert dominates(Partition((3, 1)), Partition((2, 2)))
        assert not dominates(Partition((2, 2)), Partition((3, 1)))
        assert not dominates(Partition((2, 1, 1)), Partition((2, 2)))
        assert dominates(Partition((2, 2)), Partition((2, 1, 1)))

    def test_weight_mismatch_is_an_error(self):
        with pytest.raises(WeightMismatchError):
            dominates(Partition((2,)), Partition((2, 1)))

    def test_partial_order_axioms_up_to_10(self):
        for n in range(11):
            ps = partitions_of(n)
            for a in ps:
                assert dominates(a, a)
            for a in ps:
                for b in ps:
                    if dominates(a, b) and dominates(b, a):
                        assert a == b
            rel = {
                (a, b) for a in ps for b in ps if dominates(a, b)
            }
            for a, b in rel:
                for c in ps:
                    if (b, c) in rel:
                        assert (a, c) in rel

    def test_anti_automorphism_up_to_10(self):
        for n in range(11):
            ps = partitions_of(n)
            for a in ps:
                for b in ps:
                    assert dominates(a, b) == dominates(
                        b.transpose(), a.transpose()
                    )


class TestCanonicalOrder:
    def test_indices_n3(self):
        order = PartitionOrder(3)
        assert order.index(Partition((3,))) == 0
        assert order.index(Partition((2, 1))) == 1
        assert order.index(Partition((1, 1, 1))) == 2

    def test_indices_n2(self):
        order = PartitionOrder(2)
        assert order.index(Partition((2,))) == 0
        assert order.index(Partition((1, 1))) == 1

    def test_wrong_weight_raises(self):
        with pytest.raises(WeightMismatchError):
            PartitionOrder(3).index(Partition((2,)))

    def test_roundtrip_and_len(self):
        order = PartitionOrder(6)
        assert len(order) == len(partitions_of(6))
        for i, p in enumerate(order):
            assert order[i] == p
            assert order.index(p) == i

    def test_linear_extension_of_dominance_up_to_12(self):
        for n in range(13):
            order = PartitionOrder(n)
            for i, a in enumerate(order):
                for j, b in enumerate(order):
                    if a != b and dominates(a, b):
                        assert i < j

    def test_sort_key_matches_order(self):
        for n in range(10):
            ps = partitions_of(n)
            assert sorted(ps, key=canonical_key) == ps


class TestParseFormat:
    def test_basic(self):
        assert parse_partition("3,1") == Partition((3, 1))
        assert parse_partition(" 3 , 1 ") == Partition((3, 1))

    def test_strict_rejects_unsorted(self):
        with pytest.raises(PartitionParseError):
            parse_partition("1,3")

    def test_lenient_sorts(self):
        assert parse_partition("1,3", strict=False) == Partition((3, 1))

    def test_roundtrip(self):
        assert format_partition(parse_partition("2,2,1")) == "2,2,1"

    def test_empty_string_is_weight_zero(self):
        assert parse_partition("") == Partition()
        assert format_partition(Partition()) == ""

    @pytest.mark.parametrize("bad", ["3,,1", "0", "-2", "a", "1.5", ","])
    def test_rejects_malformed(self, bad):
        with pytest.raises(PartitionParseError):
            parse_partition(bad)

    @given(partitions())
    def test_roundtrip_property(self, p):
        assert parse_partition(format_partition(p)) == p


class TestDominanceCovers:
    def test_matches_transitive_reduction_up_to_8(self):
        for n in range(9):
            order = PartitionOrder(n)
            expected = covers_by_transitive_reduction(order)
            actual = {
                (a, b) for a in order for b in dominance_covers(a)
            }
            assert actual == expected

    def test_chain_n5_has_expected_edges(self):
        # the dominance order on P(5) has 7 nodes
        order = PartitionOrder(5)
        edges = [(a, b) for a in order for b in dominance_covers(a)]
        assert len(order) == 7
        assert (Partition((5,)), Partition((4, 1))) in edges


class TestComposition:
    def test_order_matters(self):
        assert Composition((1, 3)) != Composition((3, 1))
        assert Composition((1, 3)).n == 4

    def test_sort_gives_partition(self):
        assert Composition((1, 3, 2)).sort() == Partition((3, 2, 1))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Composition((2, 0))
