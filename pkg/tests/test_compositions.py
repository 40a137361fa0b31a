"""Signed compositions, bi-partitions, sorting maps, reflection subgroups.

Counting oracles here are independent of the enumerators under test: signed
compositions are regenerated from break-point bitmasks with explicit sign
patterns, and bi-partition counts come from a two-sided partition-number
convolution.
"""

import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from softgroups import (
    BiPartition,
    SignedComposition,
    adjacent_transposition,
    bipartition_shape,
    bipartitions,
    canonical_composition,
    partitions,
    reflection_generators,
    reflection_subgroup,
    sign_change,
    signed_compositions,
)


def oracle_signed_compositions(n):
    """Break points of 1..n given by a bitmask, then all sign patterns."""
    out = set()
    for mask in range(2 ** (n - 1)):
        parts = []
        size = 1
        for pos in range(n - 1):
            if mask >> pos & 1:
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        for signs in itertools.product((1, -1), repeat=len(parts)):
            out.add(tuple(s * p for s, p in zip(signs, parts)))
    return out


def oracle_partition_count(n):
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


def oracle_bipartition_count(n):
    return sum(
        oracle_partition_count(k) * oracle_partition_count(n - k)
        for k in range(n + 1)
    )


class TestSignedComposition:
    def test_parts_validation(self):
        with pytest.raises(ValueError):
            SignedComposition(())
        with pytest.raises(ValueError):
            SignedComposition((1, 0, 2))

    def test_weight(self):
        assert SignedComposition((1, -2, 1)).weight == 4

    def test_counts_match_oracle(self):
        for n in range(1, 7):
            got = {c.parts for c in signed_compositions(n)}
            assert got == oracle_signed_compositions(n)

    def test_frozen_counts(self):
        assert [len(signed_compositions(n)) for n in range(1, 7)] == [
            2, 6, 18, 54, 162, 486,
        ]

    def test_canonical_order_small(self):
        assert [c.parts for c in signed_compositions(1)] == [(1,), (-1,)]
        assert [c.parts for c in signed_compositions(2)] == [
            (1, 1), (1, -1), (-1, 1), (-1, -1), (2,), (-2,),
        ]

    def test_order_is_deterministic(self):
        assert signed_compositions(4) == signed_compositions(4)
        listing = [c.parts for c in signed_compositions(4)]
        assert len(listing) == len(set(listing))


class TestPartitions:
    def test_counts_match_oracle(self):
        for n in range(0, 12):
            assert len(partitions(n)) == oracle_partition_count(n)

    def test_parts_weakly_decreasing(self):
        for p in partitions(7):
            assert list(p) == sorted(p, reverse=True)
            assert sum(p) == 7


class TestBiPartition:
    def test_validation(self):
        with pytest.raises(ValueError):
            BiPartition((1, 2), ())  # not weakly decreasing
        with pytest.raises(ValueError):
            BiPartition((0,), ())

    def test_counts_match_oracle(self):
        for n in range(1, 7):
            assert len(bipartitions(n)) == oracle_bipartition_count(n)

    def test_frozen_counts(self):
        assert [len(bipartitions(n)) for n in range(1, 7)] == [
            2, 5, 10, 20, 36, 65,
        ]

    def test_canonical_order_small(self):
        assert [(b.plus, b.minus) for b in bipartitions(1)] == [
            ((1,), ()), ((), (1,)),
        ]
        assert [(b.plus, b.minus) for b in bipartitions(2)] == [
            ((2,), ()), ((1, 1), ()), ((1,), (1,)), ((), (2,)), ((), (1, 1)),
        ]

    def test_weight(self):
        assert BiPartition((2, 1), (1,)).weight == 4


class TestSortingMaps:
    def test_shape_example(self):
        shape = bipartition_shape(SignedComposition((1, -2, 1)))
        assert shape.plus == (1, 1)
        assert shape.minus == (2,)

    def test_shape_sorts_each_side(self):
        shape = bipartition_shape(SignedComposition((3, -1, 2, -4)))
        assert shape.plus == (3, 2)
        assert shape.minus == (4, 1)

    def test_canonical_composition_example(self):
        comp = canonical_composition(BiPartition((2, 1), (1,)))
        assert comp.parts == (2, 1, -1)

    def test_canonical_composition_rejects_empty(self):
        with pytest.raises(ValueError):
            canonical_composition(BiPartition((), ()))

    def test_shape_after_canonical_is_identity(self):
        for n in range(1, 6):
            for mu in bipartitions(n):
                assert bipartition_shape(canonical_composition(mu)) == mu

    def test_shape_is_surjective(self):
        for n in range(1, 6):
            images = {bipartition_shape(a) for a in signed_compositions(n)}
            assert images == set(bipartitions(n))

    @given(st.lists(st.integers(min_value=-4, max_value=4).filter(bool),
                    min_size=1, max_size=5))
    def test_shape_preserves_weight(self, parts):
        comp = SignedComposition(tuple(parts))
        assert bipartition_shape(comp).weight == comp.weight


def oracle_reflection_windows(comp):
    """Adjacent transpositions strictly inside a block; a sign change at the
    start of each positive block.  Recomputed from prefix sums."""
    n = comp.weight
    bounds = []
    start = 1
    for part in comp.parts:
        size = abs(part)
        bounds.append((start, start + size - 1, part > 0))
        start += size
    wanted = set()
    for lo, hi, positive in bounds:
        for i in range(lo, hi):
            wanted.add(adjacent_transposition(n, i).window)
        if positive:
            wanted.add(sign_change(n, lo).window)
    return wanted


class TestReflectionSubgroups:
    def test_generators_match_oracle(self):
        for n in range(1, 5):
            for comp in signed_compositions(n):
                got = {g.window for g in reflection_generators(comp)}
                assert got == oracle_reflection_windows(comp), comp.parts

    def test_generators_sorted(self):
        gens = reflection_generators(SignedComposition((2, -2, 1)))
        wins = [g.window for g in gens]
        assert wins == sorted(wins)

    def test_full_positive_block_gives_whole_group(self):
        for n in (1, 2, 3):
            w = reflection_subgroup(SignedComposition((n,)))
            assert len(w) == 2 ** n * math.factorial(n)

    def test_full_negative_block_gives_symmetric_group(self):
        for n in (2, 3):
            w = reflection_subgroup(SignedComposition((-n,)))
            assert len(w) == math.factorial(n)

    def test_all_negative_ones_gives_trivial_group(self):
        for n in (1, 2, 3):
            w = reflection_subgroup(SignedComposition((-1,) * n))
            assert len(w) == 1

    def test_order_formula(self):
        # |W_A| is the product over parts of 2^a a! for a > 0 and |a|! for
        # a < 0; checked exhaustively for all signed compositions up to
        # weight 4 by running the closure
        for n in range(1, 5):
            for comp in signed_compositions(n):
                expected = 1
                for part in comp.parts:
                    if part > 0:
                        expected *= 2 ** part * math.factorial(part)
                    else:
                        expected *= math.factorial(-part)
                assert len(reflection_subgroup(comp)) == expected, comp.parts

    def test_subgroup_of_ambient_group(self):
        from softgroups import hyperoctahedral_group, is_subgroup

        w3 = hyperoctahedral_group(3)
        for comp in signed_compositions(3):
            assert is_subgroup(reflection_subgroup(comp), w3)

    def test_cached(self):
        comp = SignedComposition((2, -1))
        assert reflection_subgroup(comp) is reflection_subgroup(comp)
