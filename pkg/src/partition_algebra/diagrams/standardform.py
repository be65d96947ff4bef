"""Generator words and standard expressions of seat-plans.

A word is a sequence of letters ``s_i``, ``f_i``, ``e_i``; it is evaluated by
stacking the generator diagrams from left (top) to right (bottom). Every
seat-plan has a standard word that evaluates back to it with no factor of Q.
"""

import random
import re
from collections import deque
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field
from rich.console import Console

from ..exactratio import IntPoly
from ..models import RelationCheck, Report
from ..utils.console import progress
from ..utils.exceptions import IndexOutOfRangeError, ParseError
from .algebra import AlgElement, format_power_term
from .seatplan import (
    SeatPlan,
    compose,
    enumerate_all,
    format_seatplan,
    generator_e,
    generator_f,
    generator_s,
    identity,
    is_propagating,
    random_seatplan,
)


class LetterTag(str, Enum):
    """Generator families."""

    S = "s"  # transposition
    F = "f"  # fusion of two neighbouring strands
    E = "e"  # cut of one strand


class Letter(BaseModel):
    """One generator ``s_i``, ``f_i`` or ``e_i``."""

    model_config = ConfigDict(frozen=True)

    tag: LetterTag = Field(description="Generator family")
    index: int = Field(gt=0, description="Generator index")

    def check(self, n: int) -> None:
        """Raise IndexOutOfRangeError if the letter is not a generator of A_n(Q)."""
        top = n if self.tag == LetterTag.E else n - 1
        if self.index > top:
            raise IndexOutOfRangeError(f"{self} is not a generator for n={n}")

    def diagram(self, n: int) -> SeatPlan:
        return _generator_diagram(self.tag, n, self.index)

    def __str__(self) -> str:
        return f"{self.tag.value}{self.index}"


def S(i: int) -> Letter:  # noqa: N802
    return Letter(tag=LetterTag.S, index=i)


def F(i: int) -> Letter:  # noqa: N802
    return Letter(tag=LetterTag.F, index=i)


def E(i: int) -> Letter:  # noqa: N802
    return Letter(tag=LetterTag.E, index=i)


@lru_cache(maxsize=None)
def _generator_diagram(tag: LetterTag, n: int, i: int) -> SeatPlan:
    if tag == LetterTag.S:
        return generator_s(n, i)
    if tag == LetterTag.F:
        return generator_f(n, i)
    return generator_e(n, i)


class Word(BaseModel):
    """A finite sequence of letters; the empty word is the identity."""

    model_config = ConfigDict(frozen=True)

    letters: Tuple[Letter, ...] = Field(default=(), description="Letters, read left to right")

    @classmethod
    def of(cls, *letters: Letter) -> "Word":
        return cls(letters=letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(letters=self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)


_LETTER = re.compile(r"([sfeSFE])(\d+)")


def parse_word(text: str) -> Word:
    """Parse whitespace-separated letters such as ``"s1 f2 e3"`` (case-insensitive).

    Raises:
        ParseError: On an unrecognized token (with position)
    """
    letters = []
    for match in re.finditer(r"\S+", text):
        token = _LETTER.fullmatch(match.group())
        if not token or int(token.group(2)) == 0:
            raise ParseError(f"Invalid letter {match.group()!r}", match.start())
        letters.append(Letter(tag=LetterTag(token.group(1).lower()), index=int(token.group(2))))
    return Word(letters=tuple(letters))


def format_word(word: Word) -> str:
    return " ".join(str(letter) for letter in word.letters)


def eval_word(word: Word, n: int) -> Tuple[SeatPlan, int]:
    """Evaluate a word to a diagram and the accumulated power of Q.

    Raises:
        IndexOutOfRangeError: If a letter is not a generator for n

    Examples:
        >>> eval_word(parse_word("e1 e1"), 2)[1]
        1
    """
    for letter in word.letters:
        letter.check(n)
    diagram = identity(n)
    power = 0
    for letter in word.letters:
        product = compose(diagram, letter.diagram(n))
        diagram = product.diagram
        power += product.removed
    return diagram, power


def word_to_element(word: Word, n: int) -> AlgElement:
    """``Q^power * [diagram]`` for the evaluated word."""
    diagram, power = eval_word(word, n)
    return AlgElement.basis(diagram, IntPoly.monomial(1, power))


class PartData(BaseModel):
    """Ordered upper and lower parts of a seat-plan.

    Propagating parts come first in each sequence, then the defective ones;
    within each class parts are ordered by their smallest point. ``sigma[k-1]``
    is the (1-based) index of the upper part joined to the k-th lower part.
    """

    model_config = ConfigDict(frozen=True)

    mseq: Tuple[Tuple[int, ...], ...] = Field(description="Upper parts M_1..M_u")
    fseq: Tuple[Tuple[int, ...], ...] = Field(description="Lower parts F_1..F_v, signed")
    p: int = Field(ge=0, description="Propagating number")
    sigma: Tuple[int, ...] = Field(description="Matching of propagating lower to upper parts")


def part_data(w: SeatPlan) -> PartData:
    """Split a seat-plan into its ordered upper and lower parts.

    Examples:
        >>> from .seatplan import generator_e
        >>> part_data(generator_e(2, 1)).mseq
        ((2,), (1,))
    """
    propagating = [block for block in w.blocks if is_propagating(block)]

    def top(block: Sequence[int]) -> Tuple[int, ...]:
        return tuple(p for p in block if p > 0)

    def bottom(block: Sequence[int]) -> Tuple[int, ...]:
        return tuple(p for p in block if p < 0)

    m_prop = sorted((top(b) for b in propagating), key=lambda part: part[0])
    f_prop = sorted((bottom(b) for b in propagating), key=lambda part: -part[0])
    m_def = sorted((b for b in w.blocks if b[-1] > 0), key=lambda part: part[0])
    f_def = sorted((b for b in w.blocks if b[0] < 0), key=lambda part: -part[0])

    owner = {bottom(b): top(b) for b in propagating}
    sigma = tuple(m_prop.index(owner[part]) + 1 for part in f_prop)
    return PartData(
        mseq=tuple(m_prop + m_def),
        fseq=tuple(f_prop + f_def),
        p=len(propagating),
        sigma=sigma,
    )


def permutation_word(images: Sequence[int]) -> Word:
    """S-word evaluating to the diagram joining top j to bottom ``images[j-1]'``.

    Bubble-sorts the image list and records each adjacent swap position, which
    gives a reduced word.

    Examples:
        >>> str(permutation_word([2, 3, 1]))
        's2 s1'
    """
    values = list(images)
    letters = []
    for end in range(len(values) - 1, 0, -1):
        for pos in range(end):
            if values[pos] > values[pos + 1]:
                values[pos], values[pos + 1] = values[pos + 1], values[pos]
                letters.append(S(pos + 1))
    return Word(letters=tuple(letters))


def _intervals(parts: Sequence[Sequence[int]]) -> List[Tuple[int, int]]:
    """Consecutive slot ranges occupied by the parts laid out one after another."""
    spans = []
    start = 1
    for part in parts:
        spans.append((start, start + len(part) - 1))
        start += len(part)
    return spans


def _fuse_run(spans: Iterable[Tuple[int, int]]) -> List[Letter]:
    return [F(k) for first, last in spans for k in range(first, last)]


def standard_word(w: SeatPlan) -> Word:
    """Standard expression of a seat-plan; evaluates to ``w`` with power 0.

    The word is assembled in five stages:

    1. a permutation carrying the upper parts, laid out in order, to
       consecutive slots;
    2. fusion runs joining the slots of each upper part;
    3. a permutation sending the first slot of each propagating upper part to
       the first slot of the lower part it meets;
    4. cuts ``e_j`` on every slot that is not such a first slot, followed by
       fusion runs joining the slots of each lower part;
    5. a permutation carrying the slots to the lower parts' points.

    Every middle strand stays attached to a boundary point, so no closed
    component (and no factor of Q) appears.
    """
    n = w.n
    data = part_data(w)
    upper = [list(part) for part in data.mseq]
    lower = [[-p for p in part] for part in data.fseq]
    upper_spans = _intervals(upper)
    lower_spans = _intervals(lower)

    to_slot = [0] * n
    for slot, label in enumerate((x for part in upper for x in part), start=1):
        to_slot[label - 1] = slot
    letters = list(permutation_word(to_slot).letters)
    letters += _fuse_run(upper_spans)

    middle = [0] * n
    designated = set()
    for k in range(data.p):
        source = upper_spans[data.sigma[k] - 1][0]
        target = lower_spans[k][0]
        middle[source - 1] = target
        designated.add(target)
    free_targets = iter(t for t in range(1, n + 1) if t not in designated)
    for source in range(1, n + 1):
        if middle[source - 1] == 0:
            middle[source - 1] = next(free_targets)
    letters += permutation_word(middle).letters

    letters += [E(j) for j in range(1, n + 1) if j not in designated]
    letters += _fuse_run(lower_spans)
    letters += permutation_word([x for part in lower for x in part]).letters
    return Word(letters=tuple(letters))


def span_words(
    n: int, letters: Sequence[Letter], max_length: Optional[int] = None
) -> Dict[SeatPlan, Tuple[Word, int]]:
    """Breadth-first closure of the identity under right multiplication by letters.

    Returns, for every diagram reached, the first (shortest) word found and its
    power of Q.
    """
    for letter in letters:
        letter.check(n)
    start = identity(n)
    found: Dict[SeatPlan, Tuple[Word, int]] = {start: (Word(), 0)}
    queue = deque([start])
    while queue:
        diagram = queue.popleft()
        word, power = found[diagram]
        if max_length is not None and len(word) >= max_length:
            continue
        for letter in letters:
            product = compose(diagram, letter.diagram(n))
            if product.diagram not in found:
                found[product.diagram] = (
                    word + Word.of(letter),
                    power + product.removed,
                )
                queue.append(product.diagram)
    return found


def round_trip_check(w: SeatPlan) -> RelationCheck:
    """Check that the standard word of ``w`` evaluates to ``w`` with no factor of Q."""
    word = standard_word(w)
    diagram, power = eval_word(word, w.n)
    passed = diagram == w and power == 0
    check = RelationCheck(
        rule="round-trip",
        lhs_word=format_word(word) or "1",
        rhs_word=format_seatplan(w),
        passed=passed,
    )
    if not passed:
        check.lhs = format_power_term(diagram, power)
        check.rhs = format_power_term(w, 0)
    return check


def round_trip_report(
    n: int,
    exhaustive: bool = True,
    sample_size: int = 500,
    seed: int = 0,
    console: Optional[Console] = None,
) -> Report:
    """Round-trip every diagram at n strands, or the generators plus a seeded sample.

    Args:
        n: Strand count
        exhaustive: Check all B_{2n} diagrams when True
        sample_size: Number of random diagrams when not exhaustive
        seed: Seed for the random sample
        console: Rich console for a progress bar (optional)
    """
    if exhaustive:
        diagrams = list(enumerate_all(n))
        title = f"round trip n={n} (all {len(diagrams)} diagrams)"
    else:
        rng = random.Random(seed)
        diagrams = [identity(n)]
        diagrams += [generator_s(n, i) for i in range(1, n)]
        diagrams += [generator_f(n, i) for i in range(1, n)]
        diagrams += [generator_e(n, i) for i in range(1, n + 1)]
        diagrams += [random_seatplan(n, rng) for _ in range(sample_size)]
        title = f"round trip n={n} (generators and {sample_size} samples, seed {seed})"
    report = Report(title=title)
    for w in progress(diagrams, console, f"Round trip n={n}"):
        report.checks.append(round_trip_check(w))
    return report
