"""Relation checks on the seminormal matrices."""

from typing import List, Optional

from rich.console import Console

from ..diagrams.relations import (
    Relation,
    basic_relations,
    derived_relations,
    half_relations,
    presentation_relations,
    rhs_text,
    unique,
)
from ..diagrams.standardform import format_word
from ..exactratio import Q
from ..models import RelationCheck, Report
from ..utils.console import progress
from ..utils.exceptions import BoundExceededError, IndexOutOfRangeError
from .bratteli import AugShape, LevelLike, format_level, to_doubled, vertices
from .matrices import first_difference, mat_scale
from .seminormal import CValue, SeminormalForm, letter_available
from .tables import ReductiveTables

DEFAULT_MAX_LEVEL = 3


def rep_relations(doubled: int) -> List[Relation]:
    """Relation instances whose letters all act at the (doubled) level.

    Integer levels use the full A_n(Q) catalogue; half levels ``n - 1/2`` use
    the presentation of A_{n-1}(Q), the starred relations and every basic
    relation among the letters available there.
    """
    if doubled % 2 == 0:
        n = doubled // 2
        rels = presentation_relations(n) + basic_relations(n) + derived_relations(n)
    else:
        n = (doubled + 1) // 2
        rels = presentation_relations(n - 1) + half_relations(n) + basic_relations(n)
    return [
        rel
        for rel in unique(rels)
        if all(letter_available(letter, doubled) for letter in rel.letters())
    ]


def check_on_module(
    rel: Relation, form: SeminormalForm, target: AugShape, level: LevelLike
) -> RelationCheck:
    """Compare both sides of a relation as exact matrices on one module."""
    left = form.word(rel.lhs, target, level)
    right = form.word(rel.rhs, target, level)
    if rel.q_power:
        right = mat_scale(right, Q**rel.q_power)
    diff = first_difference(left, right)
    check = RelationCheck(
        rule=rel.rule,
        indices=rel.indices,
        lhs_word=format_word(rel.lhs) or "1",
        rhs_word=rhs_text(rel),
        shape=str(target),
        passed=diff is None,
    )
    if diff is not None:
        r, col = diff
        check.lhs = f"entry ({r + 1},{col + 1}) = {left[r][col]}"
        check.rhs = f"entry ({r + 1},{col + 1}) = {right[r][col]}"
    return check


def verify_rep_relations(
    level: LevelLike,
    c: CValue = 1,
    tables: Optional[ReductiveTables] = None,
    max_level: int = DEFAULT_MAX_LEVEL,
    console: Optional[Console] = None,
) -> Report:
    """Check every available relation on every irreducible module at a level.

    Args:
        level: Level, from 1 up to ``max_level`` (half levels allowed)
        c: Off-diagonal scale of the two-path S blocks
        tables: Reductive blocks to use (defaults to the packaged tables)
        max_level: Largest level accepted
        console: Rich console for a progress bar (optional)

    Returns:
        Report with one record per (relation instance, shape)

    Raises:
        IndexOutOfRangeError: If the level is below 1
        BoundExceededError: If the level exceeds ``max_level``
    """
    doubled = to_doubled(level)
    if doubled < 2:
        raise IndexOutOfRangeError(f"Representation suites need level >= 1, got {level}")
    if doubled > 2 * max_level:
        raise BoundExceededError(
            f"Level {format_level(doubled)} exceeds the representation bound {max_level}"
        )
    form = SeminormalForm(c=c, tables=tables)
    relations = rep_relations(doubled)
    targets = vertices(level)
    report = Report(title=f"representation relations level {format_level(doubled)} c={form.c}")
    for rel in progress(relations, console, f"Relations at level {format_level(doubled)}"):
        for target in targets:
            report.checks.append(check_on_module(rel, form, target, level))
    if console is not None:
        console.print(
            f"[dim]Level {format_level(doubled)}: {len(relations)} relations on "
            f"{len(targets)} shapes, {len(report.failures)} failures[/dim]"
        )
    return report
