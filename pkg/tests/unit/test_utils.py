"""Tests for union-find and set-partition helpers."""

import random

import pytest

from partition_algebra.utils.set_partitions import (
    bell_number,
    blocks_from_growth_string,
    random_growth_string,
    restricted_growth_strings,
)
from partition_algebra.utils.union_find import UnionFind


class TestUnionFind:
    """Test the disjoint-set forest."""

    def test_singletons(self):
        """Test a fresh forest has one class per element."""
        assert UnionFind(3).classes() == [[0], [1], [2]]

    def test_union_merges_classes(self):
        """Test chained unions and class order."""
        forest = UnionFind(5)
        forest.union(3, 4)
        forest.union(0, 3)
        forest.union(1, 1)
        assert forest.find(0) == forest.find(4)
        assert forest.find(1) != forest.find(0)
        assert sorted(forest.classes()) == [[0, 3, 4], [1], [2]]


class TestSetPartitions:
    """Test restricted growth strings and Bell numbers."""

    @pytest.mark.parametrize("m,expected", [(0, 1), (1, 1), (2, 2), (4, 15), (6, 203), (8, 4140)])
    def test_bell_numbers(self, m, expected):
        """Test the Bell triangle."""
        assert bell_number(m) == expected

    @pytest.mark.parametrize("size", [1, 2, 3, 4, 5])
    def test_growth_string_count(self, size):
        """Test there is one growth string per set partition."""
        strings = list(restricted_growth_strings(size))
        assert len(strings) == bell_number(size)
        assert len(set(strings)) == len(strings)

    def test_growth_strings_are_restricted(self):
        """Test each label is at most one more than the largest before it."""
        for labels in restricted_growth_strings(5):
            assert labels[0] == 0
            for k in range(1, len(labels)):
                assert labels[k] <= 1 + max(labels[:k])

    def test_random_growth_string_is_restricted(self):
        """Test seeded random strings follow the growth rule."""
        rng = random.Random(0)
        for _ in range(50):
            labels = random_growth_string(6, rng)
            assert labels[0] == 0
            assert all(labels[k] <= 1 + max(labels[:k]) for k in range(1, 6))

    def test_blocks_from_growth_string(self):
        """Test grouping items by label."""
        assert blocks_from_growth_string("abcd", (0, 1, 0, 2)) == [["a", "c"], ["b"], ["d"]]
