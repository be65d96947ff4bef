"""Tests for the relation catalogue checked on diagrams."""

import pytest

from partition_algebra.diagrams.relations import (
    EXCLUDED_NOTE,
    Relation,
    basic_relations,
    check_on_diagrams,
    derived_relations,
    half_generators,
    half_relation_suite,
    half_relations,
    presentation_relations,
    relation_catalogue,
    relation_suite,
    rhs_text,
    unique,
)
from partition_algebra.diagrams.standardform import E, F, S, Word
from partition_algebra.utils.exceptions import BoundExceededError, IndexOutOfRangeError


def _bad_idempotent() -> Relation:
    """s1 s1 = s1, which fails on diagrams."""
    return Relation(rule="bad", indices=(1,), lhs=Word.of(S(1), S(1)), rhs=Word.of(S(1)))


class TestCatalogue:
    """Test the relation instances generated for each n."""

    def test_every_instance_uses_valid_letters(self):
        """Test no instance mentions a letter beyond n strands."""
        for n in range(2, 6):
            for rel in relation_catalogue(n):
                assert rel.valid_for(n), rel

    def test_basic_relations_include_cut_squared(self):
        """Test E1 instances e_i e_i = Q e_i for i = 1..n."""
        cut_squared = [r for r in basic_relations(3) if r.rule == "E1"]
        assert [r.indices for r in cut_squared] == [(1,), (2,), (3,)]
        assert all(r.q_power == 1 for r in cut_squared)

    def test_presentation_is_truncated_for_small_n(self):
        """Test that n=2 drops instances needing s2."""
        rules = {r.rule for r in presentation_relations(2)}
        assert "R2'" in rules
        assert "E5'" not in rules

    def test_derived_relations(self):
        """Test R2'' appears from n=3 and E4'' for every s_i."""
        assert {r.rule for r in derived_relations(2)} == {"E4''"}
        assert "R2''" in {r.rule for r in derived_relations(3)}

    def test_unique_drops_repeats(self):
        """Test duplicate instances are kept once."""
        rel = _bad_idempotent()
        assert unique([rel, rel]) == [rel]

    def test_rhs_text(self):
        """Test the empty right side prints as 1 and powers of Q are shown."""
        e = E(1)
        assert rhs_text(Relation(rule="x", lhs=Word.of(S(1), S(1)), rhs=Word())) == "1"
        cut = Relation(rule="E1", lhs=Word.of(e, e), rhs=Word.of(e), q_power=1)
        assert rhs_text(cut) == "Q^1 * e1"

    def test_half_generators(self):
        """Test e, f, s_1..s_{n-2} and f_{n-1}."""
        assert half_generators(2) == [E(1), F(1)]
        assert half_generators(4) == [E(1), F(1), S(1), S(2), F(3)]


class TestDiagramSuites:
    """Test the relation suites on diagrams."""

    @pytest.mark.parametrize("n", [2, 3])
    def test_suite_passes(self, n):
        """Test every instance holds for small n."""
        report = relation_suite(n)
        assert report.all_passed, report.failures
        assert EXCLUDED_NOTE in report.notes

    @pytest.mark.slow
    def test_suite_passes_on_four_strands(self):
        """Test every instance holds for n=4."""
        report = relation_suite(4)
        assert report.all_passed, report.failures

    def test_span_record_for_three_strands(self):
        """Test the generators reach all 203 diagrams."""
        report = relation_suite(3)
        span = [c for c in report.checks if c.rule == "span"]
        assert len(span) == 1
        assert span[0].passed
        assert span[0].rhs_word == "203 diagrams"

    def test_corrupted_relation_fails(self):
        """Test s1 s1 = s1 is reported with both normalized sides."""
        report = relation_suite(2, extra=[_bad_idempotent()])
        assert len(report.failures) == 1
        failure = report.failures[0]
        assert failure.rule == "bad"
        assert failure.lhs == "Q^0 * {{1,1'},{2,2'}}"
        assert failure.rhs == "Q^0 * {{1,2'},{2,1'}}"
        assert failure.line().startswith("FAIL bad (1) s1 s1 = s1")

    def test_check_on_diagrams_accounts_for_q(self):
        """Test e1 e1 = Q e1 passes but e1 e1 = e1 fails."""
        e = E(1)
        good = Relation(rule="E1", lhs=Word.of(e, e), rhs=Word.of(e), q_power=1)
        bad = Relation(rule="E1", lhs=Word.of(e, e), rhs=Word.of(e))
        assert check_on_diagrams(good, 2).passed
        assert not check_on_diagrams(bad, 2).passed

    @pytest.mark.parametrize("n,error", [(1, IndexOutOfRangeError), (6, BoundExceededError)])
    def test_bounds(self, n, error):
        """Test suites reject n outside 2..5."""
        with pytest.raises(error):
            relation_suite(n)


class TestHalfSuites:
    """Test the A_{n-1/2}(Q) relations."""

    @pytest.mark.parametrize("n", [3, 4])
    def test_half_suite_passes(self, n):
        """Test R2*, R4*, E4* and closure."""
        report = half_relation_suite(n)
        assert report.all_passed, report.failures
        rules = {c.rule for c in report.checks}
        assert {"R2*", "R4*", "E4*", "closure"} <= rules

    def test_half_suite_on_two_strands(self):
        """Test A_{3/2}: the five diagrams joining 2 and 2'."""
        report = half_relation_suite(2)
        assert report.all_passed, report.failures

    def test_half_relations_use_last_fusion(self):
        """Test f_* = f_{n-1} appears in every starred instance."""
        for rel in half_relations(4):
            assert F(3) in rel.letters()
