"""Tests for report and record models."""

import json

import pytest
from pydantic import ValidationError

from partition_algebra.models import (
    DimensionRecord,
    MatrixEntryRecord,
    ProductRecord,
    RankRecord,
    Record,
    RelationCheck,
    Report,
    SumRecord,
    TraceRecord,
    VerdictRecord,
    WordRecord,
)


def _check(passed: bool, rule: str = "R1") -> RelationCheck:
    return RelationCheck(
        rule=rule,
        indices=(1,),
        lhs_word="s1 s1",
        rhs_word="1",
        passed=passed,
        lhs=None if passed else "Q^0 * {{1,1'}}",
        rhs=None if passed else "Q^1 * {{1,1'}}",
    )


class TestRelationCheck:
    """Test RelationCheck lines."""

    def test_passing_line(self):
        """Test a passing record prints without the normalized sides."""
        assert _check(True).line() == "PASS R1 (1) s1 s1 = 1"

    def test_failing_line(self):
        """Test a failing record prints both sides."""
        line = _check(False).line()
        assert line == "FAIL R1 (1) s1 s1 = 1 | lhs: Q^0 * {{1,1'}} | rhs: Q^1 * {{1,1'}}"

    def test_shape_is_appended(self):
        """Test representation checks name their module."""
        check = RelationCheck(rule="E1'", lhs_word="e1 e1", rhs_word="Q^1 * e1", shape="~[]",
                              passed=True)
        assert check.line() == "PASS E1' () e1 e1 = Q^1 * e1 on ~[]"

    def test_json_round_trip(self):
        """Test records serialize with every field."""
        data = json.loads(_check(False).model_dump_json())
        assert data["rule"] == "R1"
        assert data["passed"] is False
        assert data["indices"] == [1]


class TestReport:
    """Test Report summaries."""

    def test_summary_counts(self):
        """Test totals, passes and failures."""
        report = Report(title="t", checks=[_check(True), _check(False), _check(True)])
        summary = report.summary()
        assert (summary.total, summary.passed, summary.failed) == (3, 2, 1)
        assert not report.all_passed
        assert len(report.failures) == 1

    def test_empty_report_passes(self):
        """Test a report with no checks has no failures."""
        assert Report(title="empty").all_passed

    def test_merge_keeps_checks_and_notes(self):
        """Test merging two reports."""
        a = Report(title="a", checks=[_check(True)], notes=["x"])
        b = Report(title="b", checks=[_check(False, "R2")])
        merged = Report.merge("both", [a, b])
        assert merged.title == "both"
        assert [c.rule for c in merged.checks] == ["R1", "R2"]
        assert merged.notes == ["x"]
        assert merged.lines()[1].startswith("FAIL R2")


class TestRecords:
    """Test the one-line CLI records."""

    def test_product_record(self):
        """Test Q^p * diagram."""
        assert ProductRecord(power=2, diagram="{{1,1'}}").line() == "Q^2 * {{1,1'}}"

    def test_negative_power_rejected(self):
        """Test the exponent cannot be negative."""
        with pytest.raises(ValidationError):
            ProductRecord(power=-1, diagram="{{1,1'}}")

    def test_word_record_prints_word(self):
        """Test only the word is printed."""
        assert WordRecord(diagram="{{1,2'},{2,1'}}", word="s1").line() == "s1"

    def test_dimension_record(self):
        """Test shape and dimension."""
        assert DimensionRecord(shape="~[1]", dimension=3).line() == "~[1] 3"

    def test_matrix_entry_record(self):
        """Test row, column and value."""
        assert MatrixEntryRecord(row=1, col=2, value="Q / (Q - 1)").line() == "1 2 Q / (Q - 1)"

    def test_rank_record(self):
        """Test the rank line."""
        record = RankRecord(level="3", q0=101, c="1", rows=203, rank=203)
        assert record.line() == "rank = 203 (203 diagrams, level 3, Q = 101)"

    def test_trace_record(self):
        """Test shape and trace."""
        assert TraceRecord(shape="~[]", trace="Q").line() == "~[] Q"

    def test_sum_record(self):
        """Test the sum-of-squares line and its JSON form."""
        record = SumRecord(sum_of_squares=203)
        assert record.line() == "sum_of_squares = 203"
        assert json.loads(record.model_dump_json()) == {"sum_of_squares": 203}

    @pytest.mark.parametrize("failed,expected", [(0, "all passed"), (3, "3 failed")])
    def test_verdict_record(self, failed, expected):
        """Test the final verify line."""
        assert VerdictRecord(failed=failed).line() == expected

    def test_record_without_line_cannot_be_built(self):
        """Test a Record subclass must define line()."""

        class Bare(Record):
            value: int

        with pytest.raises(TypeError):
            Bare(value=1)
