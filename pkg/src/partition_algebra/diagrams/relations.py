"""Defining relations of A_n(Q) and A_{n-1/2}(Q), checked on diagrams.

Each relation is a pair of words with ``lhs = Q^q_power * rhs``. The same
catalogue is checked here through diagram composition and in
:mod:`partition_algebra.representations.verify` through representation
matrices.

Rule names follow the usual numbering: ``R0``-``R4`` and ``E1``-``E5`` for the
basic relations, primed names for the presentation on ``s_i``, ``f = f_1`` and
``e = e_1``, double-primed names for derived local moves and starred names for
the half-integer algebra with ``f_* = f_{n-1}``.
"""

from typing import Iterable, List, Optional, Sequence, Set, Tuple

from pydantic import BaseModel, ConfigDict, Field
from rich.console import Console

from ..models import RelationCheck, Report
from ..utils.console import progress
from ..utils.exceptions import BoundExceededError, IndexOutOfRangeError
from ..utils.set_partitions import bell_number
from .algebra import format_power_term
from .seatplan import has_fixed_last_strand
from .standardform import E, F, Letter, S, Word, eval_word, format_word, span_words

EXCLUDED_NOTE = "R12'' has no stated form; it is not checked."


class Relation(BaseModel):
    """An identity ``lhs = Q^q_power * rhs`` between generator words."""

    model_config = ConfigDict(frozen=True)

    rule: str = Field(description="Rule identifier")
    indices: Tuple[int, ...] = Field(default=(), description="Generator indices of the instance")
    lhs: Word
    rhs: Word
    q_power: int = Field(default=0, ge=0, description="Power of Q multiplying the right side")

    def letters(self) -> Set[Letter]:
        return set(self.lhs.letters) | set(self.rhs.letters)

    def valid_for(self, n: int) -> bool:
        """True if every letter is a generator of A_n(Q)."""
        top = {"s": n - 1, "f": n - 1, "e": n}
        return all(letter.index <= top[letter.tag.value] for letter in self.letters())


def _rel(rule: str, indices: Tuple[int, ...], lhs: Sequence[Letter], rhs: Sequence[Letter],
         q_power: int = 0) -> Relation:
    return Relation(
        rule=rule,
        indices=indices,
        lhs=Word(letters=tuple(lhs)),
        rhs=Word(letters=tuple(rhs)),
        q_power=q_power,
    )


def _far(i: int, j: int) -> bool:
    """Index condition ``j >= i+1`` or ``j <= i-2`` for e_i against s_j and f_j."""
    return j >= i + 1 or j <= i - 2


def basic_relations(n: int) -> List[Relation]:
    """Relations R0-R4 and E1-E5 for every valid index at n strands."""
    rels: List[Relation] = []
    si = range(1, n)
    ei = range(1, n + 1)

    for i in range(1, n - 1):
        rels.append(_rel("R0", (i,), [F(i + 1)], [S(i), S(i + 1), F(i), S(i + 1), S(i)]))
    for i in range(1, n):
        rels.append(_rel("R0", (i,), [E(i + 1)], [S(i), E(i), S(i)]))

    for i in si:
        rels.append(_rel("R1", (i,), [S(i), S(i)], []))
    for i in range(1, n - 1):
        rels.append(_rel("R1", (i,), [S(i), S(i + 1), S(i)], [S(i + 1), S(i), S(i + 1)]))
    for i in si:
        for j in range(i + 2, n):
            rels.append(_rel("R1", (i, j), [S(i), S(j)], [S(j), S(i)]))

    for i in si:
        rels.append(_rel("R2", (i,), [F(i), F(i)], [F(i)]))
        for j in range(i + 1, n):
            rels.append(_rel("R2", (i, j), [F(i), F(j)], [F(j), F(i)]))

    for i in si:
        rels.append(_rel("R3", (i,), [F(i), S(i)], [F(i)]))
        rels.append(_rel("R3", (i,), [S(i), F(i)], [F(i)]))

    for i in si:
        for j in si:
            if abs(i - j) >= 2:
                rels.append(_rel("R4", (i, j), [F(i), S(j)], [S(j), F(i)]))

    for i in ei:
        rels.append(_rel("E1", (i,), [E(i), E(i)], [E(i)], q_power=1))

    for i in si:
        rels.append(_rel("E2", (i,), [S(i), E(i), E(i + 1)], [E(i), E(i + 1)]))
        rels.append(_rel("E2", (i,), [E(i), E(i + 1), S(i)], [E(i), E(i + 1)]))

    for i in ei:
        for j in si:
            if _far(i, j):
                rels.append(_rel("E3", (i, j), [E(i), S(j)], [S(j), E(i)]))
        for j in range(i + 1, n + 1):
            rels.append(_rel("E3", (i, j), [E(i), E(j)], [E(j), E(i)]))

    for i in si:
        rels.append(_rel("E4", (i,), [E(i), F(i), E(i)], [E(i)]))
        rels.append(_rel("E4", (i,), [E(i + 1), F(i), E(i + 1)], [E(i + 1)]))
        rels.append(_rel("E4", (i,), [F(i), E(i), F(i)], [F(i)]))
        rels.append(_rel("E4", (i,), [F(i), E(i + 1), F(i)], [F(i)]))

    for i in ei:
        for j in si:
            if _far(i, j):
                rels.append(_rel("E5", (i, j), [E(i), F(j)], [F(j), E(i)]))
    return rels


def presentation_relations(n: int, include_r1: bool = True) -> List[Relation]:
    """Relations of the presentation on ``s_1..s_{n-1}``, ``f = f_1`` and ``e = e_1``.

    Instances whose letters are not generators at n strands are left out, so
    small n gives the corresponding truncated presentation.
    """
    f, e = F(1), E(1)
    rels: List[Relation] = []
    if include_r1:
        rels += [r for r in basic_relations(n) if r.rule == "R1"]

    rels.append(_rel("R2'", (), [f, f], [f]))
    rels.append(_rel("R2'", (2,), [f, S(2), f, S(2)], [S(2), f, S(2), f]))
    chain = [S(2), S(1), S(3), S(2)]
    rels.append(_rel("R2'", (2, 1, 3, 2), [f] + chain + [f] + chain, chain + [f] + chain + [f]))

    rels.append(_rel("R3'", (1,), [f, S(1)], [f]))
    rels.append(_rel("R3'", (1,), [S(1), f], [f]))
    for i in range(3, n):
        rels.append(_rel("R4'", (i,), [f, S(i)], [S(i), f]))

    rels.append(_rel("E1'", (), [e, e], [e], q_power=1))
    rels.append(_rel("E2'", (1,), [e, S(1), e, S(1)], [e, S(1), e]))
    rels.append(_rel("E2'", (1,), [S(1), e, S(1), e], [e, S(1), e]))
    for i in range(2, n):
        rels.append(_rel("E3'", (i,), [e, S(i)], [S(i), e]))
    rels.append(_rel("E4'", (), [e, f, e], [e]))
    rels.append(_rel("E4'", (), [f, e, f], [f]))
    rels.append(
        _rel("E5'", (2, 1), [f, S(2), S(1), e, S(1), S(2)], [S(2), S(1), e, S(1), S(2), f])
    )
    return [r for r in rels if r.valid_for(n)]


def derived_relations(n: int) -> List[Relation]:
    """Local moves R2'' and E4'' that follow from the basic relations."""
    rels: List[Relation] = []
    for i in range(1, n - 1):
        rels.append(_rel("R2''", (i,), [F(i), S(i + 1), F(i)], [F(i), F(i + 1)]))
    for i in range(1, n):
        rels.append(_rel("E4''", (i,), [E(i), S(i)], [E(i), F(i), E(i + 1)]))
        rels.append(_rel("E4''", (i,), [E(i), F(i), E(i + 1)], [S(i), E(i + 1)]))
    return rels


def half_generators(n: int) -> List[Letter]:
    """Generators of A_{n-1/2}(Q) inside A_n(Q): e, f, s_1..s_{n-2} and f_* = f_{n-1}."""
    letters = [E(1)]
    if n >= 2:
        letters.append(F(1))
    letters += [S(i) for i in range(1, n - 1)]
    if n >= 3:
        letters.append(F(n - 1))
    return letters


def half_relations(n: int) -> List[Relation]:
    """Relations R2*, R4* and E4* with ``f_* = f_{n-1}``; n = 2 gives the A_{3/2} relations."""
    f, e, f_star = F(1), E(1), F(n - 1)
    rels: List[Relation] = []
    down = [S(i) for i in range(n - 2, 0, -1)]
    up = list(reversed(down))

    if n == 2:
        rels.append(_rel("E1'", (), [e, e], [e], q_power=1))
        rels.append(_rel("R2'", (), [f, f], [f]))
    else:
        outer = [S(i) for i in range(n - 2, 1, -1)]
        inner = list(reversed(outer))
        middle = [f_star] + outer + [f] + inner
        rels.append(
            _rel("R2*", (n - 1,), [f_star] + outer + [S(1)] + inner + [f_star], middle)
        )
        rels.append(_rel("R2*", (n - 1,), middle, outer + [f] + inner + [f_star]))
        rels.append(_rel("R4*", (n - 1,), [f, f_star], [f_star, f]))
        rels.append(_rel("R4*", (n - 1,), [e, f_star], [f_star, e]))
        for i in range(1, n - 2):
            rels.append(_rel("R4*", (n - 1, i), [f_star, S(i)], [S(i), f_star]))

    rels.append(_rel("E4*", (n - 1,), [f_star] + down + [e] + up + [f_star], [f_star]))
    rels.append(_rel("E4*", (n - 1,), [e] + up + [f_star] + down + [e], [e]))
    return rels


def unique(relations: Iterable[Relation]) -> List[Relation]:
    """Drop repeated instances, keeping first occurrences."""
    seen = set()
    result = []
    for rel in relations:
        key = (rel.rule, rel.lhs, rel.rhs, rel.q_power)
        if key not in seen:
            seen.add(key)
            result.append(rel)
    return result


def relation_catalogue(n: int) -> List[Relation]:
    """Every relation checked on diagrams at n strands."""
    return unique(
        basic_relations(n) + presentation_relations(n, include_r1=False) + derived_relations(n)
    )


def check_on_diagrams(rel: Relation, n: int) -> RelationCheck:
    """Evaluate both sides by composition and compare diagram and power of Q."""
    left, left_power = eval_word(rel.lhs, n)
    right, right_power = eval_word(rel.rhs, n)
    passed = left == right and left_power == right_power + rel.q_power
    check = RelationCheck(
        rule=rel.rule,
        indices=rel.indices,
        lhs_word=format_word(rel.lhs),
        rhs_word=rhs_text(rel),
        passed=passed,
    )
    if not passed:
        check.lhs = format_power_term(left, left_power)
        check.rhs = format_power_term(right, right_power + rel.q_power)
    return check


def rhs_text(rel: Relation) -> str:
    words = format_word(rel.rhs) or "1"
    return f"Q^{rel.q_power} * {words}" if rel.q_power else words


def _check_bounds(n: int) -> None:
    if n < 2:
        raise IndexOutOfRangeError(f"Relation suites need n >= 2, got {n}")
    if n > 5:
        raise BoundExceededError(f"Relation suites are limited to n <= 5, got {n}")


def _span_check(n: int, letters: List[Letter], expected: int, rule: str) -> RelationCheck:
    reached = span_words(n, letters)
    names = " ".join(str(letter) for letter in letters)
    return RelationCheck(
        rule=rule,
        lhs_word=f"span({names})",
        rhs_word=f"{expected} diagrams",
        passed=len(reached) == expected,
        lhs=f"{len(reached)} diagrams",
        rhs=f"{expected} diagrams",
    )


def relation_suite(
    n: int, extra: Sequence[Relation] = (), console: Optional[Console] = None
) -> Report:
    """Check every relation instance of A_n(Q) on diagrams.

    Args:
        n: Strand count, 2 <= n <= 5
        extra: Additional relations to check alongside the catalogue
        console: Rich console for a progress bar (optional)

    Returns:
        Report with one record per instance; for n <= 3 it also records that
        products of ``s_i``, ``f`` and ``e`` reach all B_{2n} diagrams
    """
    _check_bounds(n)
    relations = relation_catalogue(n) + list(extra)
    report = Report(title=f"diagram relations n={n}", notes=[EXCLUDED_NOTE])
    for rel in progress(relations, console, f"Diagram relations n={n}"):
        report.checks.append(check_on_diagrams(rel, n))
    if n <= 3:
        generators = [S(i) for i in range(1, n)] + [F(1), E(1)]
        report.checks.append(_span_check(n, generators, bell_number(2 * n), "span"))
    return report


def half_relation_suite(n: int, console: Optional[Console] = None) -> Report:
    """Check the A_{n-1/2}(Q) relations and closure of its generators.

    Besides R2*, R4* and E4*, the report records that every product of the
    generators keeps n and n' in one block and that the products reach all
    B_{2n-1} such diagrams.
    """
    _check_bounds(n)
    report = Report(title=f"half relations level {2 * n - 1}/2")
    for rel in progress(half_relations(n), console, f"Half relations n={n}"):
        report.checks.append(check_on_diagrams(rel, n))

    letters = half_generators(n)
    reached = span_words(n, letters)
    stray = [d for d in reached if not has_fixed_last_strand(d)]
    names = " ".join(str(letter) for letter in letters)
    report.checks.append(
        RelationCheck(
            rule="closure",
            lhs_word=f"span({names})",
            rhs_word=f"diagrams joining {n} and {n}'",
            passed=not stray,
            lhs=f"{len(stray)} diagrams separate {n} and {n}'",
            rhs="0",
        )
    )
    report.checks.append(_span_check(n, letters, bell_number(2 * n - 1), "span"))
    return report
