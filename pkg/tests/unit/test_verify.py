"""Tests for relation checks on the seminormal matrices."""

import pytest

from partition_algebra.diagrams.relations import Relation
from partition_algebra.diagrams.standardform import E, F, S, Word
from partition_algebra.representations.bratteli import AugShape
from partition_algebra.representations.seminormal import SeminormalForm, letter_available
from partition_algebra.representations.tables import default_tables
from partition_algebra.representations.verify import (
    check_on_module,
    rep_relations,
    verify_rep_relations,
)
from partition_algebra.utils.exceptions import BoundExceededError, IndexOutOfRangeError


class TestRepRelations:
    """Test which relation instances are checked at each level."""

    @pytest.mark.parametrize("doubled", [2, 3, 4, 5, 6])
    def test_letters_act_at_level(self, doubled):
        """Test every letter of every instance acts at the level."""
        for rel in rep_relations(doubled):
            assert all(letter_available(letter, doubled) for letter in rel.letters())

    def test_level_two_includes_efe(self):
        """Test e f e = e is checked at level 2."""
        lhs = [rel.lhs for rel in rep_relations(4)]
        assert Word.of(E(1), F(1), E(1)) in lhs

    def test_half_level_includes_starred_relations(self):
        """Test E4* is checked at level 5/2."""
        assert "E4*" in {rel.rule for rel in rep_relations(5)}


class TestCheckOnModule:
    """Test a single relation on a single module."""

    def test_passing_relation(self):
        """Test e1 e1 = Q e1 on ~[] at level 1."""
        e = E(1)
        rel = Relation(rule="E1", indices=(1,), lhs=Word.of(e, e), rhs=Word.of(e), q_power=1)
        check = check_on_module(rel, SeminormalForm(), AugShape.tilde(), 1)
        assert check.passed
        assert check.shape == "~[]"

    def test_failing_relation_reports_entry(self):
        """Test e1 e1 = e1 fails with the (1,1) entries."""
        e = E(1)
        rel = Relation(rule="E1", indices=(1,), lhs=Word.of(e, e), rhs=Word.of(e))
        check = check_on_module(rel, SeminormalForm(), AugShape.tilde(), 1)
        assert not check.passed
        assert check.lhs == "entry (1,1) = Q^2"
        assert check.rhs == "entry (1,1) = Q"


class TestVerifyRepRelations:
    """Test the representation relation suites."""

    @pytest.mark.parametrize("c", [1, 2])
    @pytest.mark.parametrize("level", [1, "3/2", 2])
    def test_small_levels_pass(self, level, c):
        """Test every instance holds exactly at small levels."""
        report = verify_rep_relations(level, c=c)
        assert report.all_passed, [check.line() for check in report.failures]
        assert report.checks

    @pytest.mark.slow
    @pytest.mark.parametrize("c", [1, 2])
    @pytest.mark.parametrize("level", ["5/2", 3])
    def test_larger_levels_pass(self, level, c):
        """Test every instance holds exactly at levels 5/2 and 3."""
        report = verify_rep_relations(level, c=c)
        assert report.all_passed, [check.line() for check in report.failures]

    @pytest.mark.slow
    @pytest.mark.parametrize("c", [1, 2])
    def test_level_seven_halves_passes_above_default_bound(self, c):
        """Test every instance holds at level 7/2 once the bound is raised to 4."""
        report = verify_rep_relations("7/2", c=c, max_level=4)
        assert report.summary().failed == 0, [check.line() for check in report.failures]
        assert report.checks

    def test_title_names_level_and_scale(self):
        """Test the report title."""
        report = verify_rep_relations("3/2", c=2)
        assert report.title == "representation relations level 3/2 c=2"

    def test_perturbed_table_is_caught(self):
        """Test one table entry increased by 1 makes level 2 fail."""
        tables = default_tables().perturbed(1, 1, 1, 0)
        report = verify_rep_relations(2, tables=tables)
        assert not report.all_passed
        failing = {(check.rule, check.shape) for check in report.failures}
        assert ("R3", "~[1]") in failing

    def test_level_below_one_raises(self):
        """Test level 1/2 raises IndexOutOfRangeError."""
        with pytest.raises(IndexOutOfRangeError):
            verify_rep_relations("1/2")

    def test_level_above_bound_raises(self):
        """Test level 4 exceeds the default bound of 3."""
        with pytest.raises(BoundExceededError):
            verify_rep_relations(4)

    def test_s_relations_at_level_two(self):
        """Test s1 s1 = 1 is among the level-2 checks."""
        report = verify_rep_relations(2)
        assert any(c.rule == "R1" and c.lhs_word == "s1 s1" for c in report.checks)
        assert all(c.shape is not None for c in report.checks)
        assert S(1) in {letter for rel in rep_relations(4) for letter in rel.letters()}
