"""Pydantic models for verification reports and CLI records."""

from abc import abstractmethod
from typing import Iterable, List, Optional, Tuple

from pydantic import BaseModel, Field


class Record(BaseModel):
    """A result that prints as one text line."""

    @abstractmethod
    def line(self) -> str:
        """Text form printed when --json is not given."""


class RelationCheck(Record):
    """Outcome of one relation instance."""

    rule: str = Field(description="Rule identifier, e.g. 'R1' or 'E4*'")
    indices: Tuple[int, ...] = Field(default=(), description="Generator indices of the instance")
    lhs_word: str = Field(description="Left-hand word")
    rhs_word: str = Field(description="Right-hand word")
    shape: Optional[str] = Field(
        default=None, description="Target shape for representation checks"
    )
    passed: bool = Field(description="Whether both sides agree")
    lhs: Optional[str] = Field(default=None, description="Normalized left side on failure")
    rhs: Optional[str] = Field(default=None, description="Normalized right side on failure")

    def line(self) -> str:
        """One-line record, e.g. ``PASS R1 (1,) s1 s1 = ``."""
        status = "PASS" if self.passed else "FAIL"
        index_text = "(" + ",".join(str(i) for i in self.indices) + ")"
        text = f"{status} {self.rule} {index_text} {self.lhs_word} = {self.rhs_word}"
        if self.shape is not None:
            text += f" on {self.shape}"
        if not self.passed:
            text += f" | lhs: {self.lhs} | rhs: {self.rhs}"
        return text


class ReportSummary(BaseModel):
    """Counts for a report."""

    title: str
    total: int
    passed: int
    failed: int


class Report(BaseModel):
    """All relation instances checked by one suite."""

    title: str = Field(description="Suite name")
    checks: List[RelationCheck] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list, description="Exclusions and remarks")

    @property
    def failures(self) -> List[RelationCheck]:
        return [check for check in self.checks if not check.passed]

    @property
    def all_passed(self) -> bool:
        return not self.failures

    def summary(self) -> ReportSummary:
        failed = len(self.failures)
        return ReportSummary(
            title=self.title,
            total=len(self.checks),
            passed=len(self.checks) - failed,
            failed=failed,
        )

    def lines(self) -> List[str]:
        return [check.line() for check in self.checks]

    @classmethod
    def merge(cls, title: str, reports: Iterable["Report"]) -> "Report":
        merged = cls(title=title)
        for report in reports:
            merged.checks.extend(report.checks)
            merged.notes.extend(report.notes)
        return merged


class ProductRecord(Record):
    """A diagram with its power of Q, e.g. a product or an evaluated word."""

    power: int = Field(ge=0, description="Exponent of Q")
    diagram: str = Field(description="Seat-plan text")

    def line(self) -> str:
        return f"Q^{self.power} * {self.diagram}"


class WordRecord(Record):
    diagram: str
    word: str

    def line(self) -> str:
        return self.word


class DiagramRecord(Record):
    diagram: str

    def line(self) -> str:
        return self.diagram


class DimensionRecord(Record):
    """Dimension of one irreducible module."""

    shape: str
    dimension: int

    def line(self) -> str:
        return f"{self.shape} {self.dimension}"


class SumRecord(Record):
    """Sum of the squared dimensions at a level."""

    sum_of_squares: int

    def line(self) -> str:
        return f"sum_of_squares = {self.sum_of_squares}"


class MatrixEntryRecord(Record):
    """One nonzero entry of a representation matrix (1-based)."""

    row: int
    col: int
    value: str

    def line(self) -> str:
        return f"{self.row} {self.col} {self.value}"


class RankRecord(Record):
    level: str
    q0: int
    c: str
    rows: int
    rank: int

    def line(self) -> str:
        return f"rank = {self.rank} ({self.rows} diagrams, level {self.level}, Q = {self.q0})"


class TraceRecord(Record):
    shape: str
    trace: str

    def line(self) -> str:
        return f"{self.shape} {self.trace}"



class VerdictRecord(Record):
    """Final line of a verify run."""

    failed: int = Field(ge=0, description="Failing records over every suite")

    def line(self) -> str:
        return f"{self.failed} failed" if self.failed else "all passed"
