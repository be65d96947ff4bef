"""Seat-plan diagrams: the basis of the partition algebra A_n(Q).

A seat-plan is a set partition of the 2n points ``1..n`` (top row) and
``1'..n'`` (bottom row). Points are stored as signed integers: ``j`` is the
top point j and ``-j`` is the bottom point j'. Points are ordered
``1 < 2 < ... < n < 1' < ... < n'``; blocks are stored sorted in that order
and listed by their first point, so two diagrams are equal exactly when their
stored blocks are.
"""

import random
import re
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..utils.exceptions import (
    BoundExceededError,
    IndexOutOfRangeError,
    NotAPartitionError,
    ParseError,
    SizeMismatchError,
)
from ..utils.set_partitions import (
    blocks_from_growth_string,
    random_growth_string,
    restricted_growth_strings,
)
from ..utils.union_find import UnionFind

DEFAULT_ENUMERATE_BOUND = 5

PointLike = Union[int, str]
Block = Tuple[int, ...]


def point_key(point: int, n: int) -> int:
    """Position of a signed point in the order ``1 < ... < n < 1' < ... < n'``."""
    return point if point > 0 else n - point


def format_point(point: int) -> str:
    return str(point) if point > 0 else f"{-point}'"


def _parse_point(token: PointLike) -> int:
    if isinstance(token, int):
        return token
    match = re.fullmatch(r"\s*(\d+)\s*('?)\s*", token)
    if not match:
        raise ParseError(f"Invalid point {token!r}")
    value = int(match.group(1))
    return -value if match.group(2) else value


def _canonical_blocks(n: int, blocks: Iterable[Iterable[PointLike]]) -> Tuple[Block, ...]:
    seen = set()
    result = []
    for raw in blocks:
        block = sorted({_parse_point(p) for p in raw}, key=lambda x: point_key(x, n))
        if not block:
            raise NotAPartitionError("Empty block")
        for point in block:
            if point == 0 or abs(point) > n:
                raise NotAPartitionError(f"Point {format_point(point)} out of range for n={n}")
            if point in seen:
                raise NotAPartitionError(f"Point {format_point(point)} appears in two blocks")
            seen.add(point)
        result.append(tuple(block))
    missing = [p for p in list(range(1, n + 1)) + list(range(-1, -n - 1, -1)) if p not in seen]
    if missing:
        listed = ", ".join(format_point(p) for p in missing)
        raise NotAPartitionError(f"Points not covered by any block: {listed}")
    result.sort(key=lambda block: point_key(block[0], n))
    return tuple(result)


class SeatPlan(BaseModel):
    """A set partition of ``{1..n} ∪ {1'..n'}``."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(gt=0, description="Number of strands")
    blocks: Tuple[Block, ...] = Field(
        description="Blocks as signed points (j' stored as -j), canonically ordered"
    )

    @model_validator(mode="before")
    @classmethod
    def canonicalize(cls, data: object) -> object:
        """Validate the set partition and put blocks in canonical order."""
        if isinstance(data, dict) and "n" in data and "blocks" in data:
            n = int(data["n"])
            if n <= 0:
                raise NotAPartitionError(f"Strand count must be positive, got {n}")
            return {"n": n, "blocks": _canonical_blocks(n, data["blocks"])}
        return data

    @classmethod
    def trusted(cls, n: int, blocks: Tuple[Block, ...]) -> "SeatPlan":
        """Build from blocks that are already canonical."""
        return cls.model_construct(n=n, blocks=blocks)

    @property
    def order_key(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(point_key(p, self.n) for p in block) for block in self.blocks)

    def block_of(self, point: int) -> Block:
        for block in self.blocks:
            if point in block:
                return block
        raise NotAPartitionError(f"Point {format_point(point)} not in diagram")

    def __str__(self) -> str:
        return format_seatplan(self)


def make(n: int, blocks: Iterable[Iterable[PointLike]]) -> SeatPlan:
    """Validate and canonicalize a seat-plan.

    Args:
        n: Number of strands
        blocks: Blocks of points, as signed integers or as strings like ``"4'"``

    Returns:
        Canonical SeatPlan

    Raises:
        NotAPartitionError: On overlapping blocks, uncovered points, empty blocks
            or points out of range

    Examples:
        >>> str(make(2, [[1, 2], [-1, -2]]))
        "{{1,2},{1',2'}}"
    """
    return SeatPlan(n=n, blocks=[list(b) for b in blocks])


def format_seatplan(w: SeatPlan) -> str:
    """Render as ``{{1,1',4'},{2,5},...}``."""
    inner = ",".join("{" + ",".join(format_point(p) for p in block) + "}" for block in w.blocks)
    return "{" + inner + "}"


def parse_seatplan(text: str, n: Optional[int] = None) -> SeatPlan:
    """Parse the ``{{1,1',4'},{2,5},{3,4},{2'},{3',5'}}`` text form.

    Args:
        text: Diagram text; whitespace is insignificant
        n: Strand count; inferred from the largest label when omitted

    Raises:
        ParseError: If the text is malformed (with position)
        NotAPartitionError: If the blocks do not form a set partition
    """
    pos = 0
    blocks: List[List[int]] = []

    def skip() -> None:
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def expect(ch: str) -> None:
        nonlocal pos
        skip()
        if pos >= len(text) or text[pos] != ch:
            found = "end of input" if pos >= len(text) else repr(text[pos])
            raise ParseError(f"Expected {ch!r}, found {found}", pos)
        pos += 1

    def peek() -> str:
        skip()
        return text[pos] if pos < len(text) else ""

    expect("{")
    if peek() != "}":
        while True:
            expect("{")
            block: List[int] = []
            if peek() != "}":
                while True:
                    skip()
                    match = re.compile(r"(\d+)\s*('?)").match(text, pos)
                    if not match:
                        raise ParseError("Expected a point label", pos)
                    value = int(match.group(1))
                    block.append(-value if match.group(2) else value)
                    pos = match.end()
                    if peek() != ",":
                        break
                    expect(",")
            expect("}")
            blocks.append(block)
            if peek() != ",":
                break
            expect(",")
    expect("}")
    skip()
    if pos != len(text):
        raise ParseError(f"Unexpected trailing text {text[pos:]!r}", pos)

    if n is None:
        n = max((abs(p) for block in blocks for p in block), default=0)
        if n == 0:
            raise NotAPartitionError("Cannot infer strand count from an empty diagram")
    return make(n, blocks)


def identity(n: int) -> SeatPlan:
    return SeatPlan.trusted(n, tuple((j, -j) for j in range(1, n + 1)))


def permutation(images: Sequence[int]) -> SeatPlan:
    """Diagram of a permutation: top j joined to bottom ``images[j-1]'``."""
    n = len(images)
    return make(n, [[j, -images[j - 1]] for j in range(1, n + 1)])


def generator_s(n: int, i: int) -> SeatPlan:
    """The transposition diagram s_i = {i, (i+1)'}, {i+1, i'}, other strands straight."""
    if not 1 <= i <= n - 1:
        raise IndexOutOfRangeError(f"s_{i} needs 1 <= i <= {n - 1}")
    blocks = [[j, -j] for j in range(1, n + 1) if j not in (i, i + 1)]
    blocks += [[i, -(i + 1)], [i + 1, -i]]
    return make(n, blocks)


def generator_f(n: int, i: int) -> SeatPlan:
    """The fusion diagram f_i = {i, i+1, i', (i+1)'}, other strands straight."""
    if not 1 <= i <= n - 1:
        raise IndexOutOfRangeError(f"f_{i} needs 1 <= i <= {n - 1}")
    blocks = [[j, -j] for j in range(1, n + 1) if j not in (i, i + 1)]
    blocks.append([i, i + 1, -i, -(i + 1)])
    return make(n, blocks)


def generator_e(n: int, i: int) -> SeatPlan:
    """The cut diagram e_i = {i}, {i'}, other strands straight."""
    if not 1 <= i <= n:
        raise IndexOutOfRangeError(f"e_{i} needs 1 <= i <= {n}")
    blocks = [[j, -j] for j in range(1, n + 1) if j != i]
    blocks += [[i], [-i]]
    return make(n, blocks)


class ComposeResult(BaseModel):
    """Product of two seat-plans: a diagram and the number of closed interior components."""

    model_config = ConfigDict(frozen=True)

    diagram: SeatPlan = Field(description="Diagram left after removing interior components")
    removed: int = Field(ge=0, description="Number of interior components (power of Q)")


def compose(a: SeatPlan, b: SeatPlan) -> ComposeResult:
    """Stack ``a`` on top of ``b`` and glue a's bottom row to b's top row.

    Nodes ``0..n-1`` are a's top row, ``n..2n-1`` the glued middle row and
    ``2n..3n-1`` b's bottom row. Components meeting neither outer row are
    removed and counted.

    Raises:
        SizeMismatchError: If the strand counts differ

    Examples:
        >>> compose(generator_e(2, 1), generator_e(2, 1)).removed
        1
    """
    if a.n != b.n:
        raise SizeMismatchError(f"Cannot compose diagrams with n={a.n} and n={b.n}")
    n = a.n
    forest = UnionFind(3 * n)

    for block in a.blocks:
        nodes = [p - 1 if p > 0 else n - p - 1 for p in block]
        for node in nodes[1:]:
            forest.union(nodes[0], node)
    for block in b.blocks:
        nodes = [n + p - 1 if p > 0 else 2 * n - p - 1 for p in block]
        for node in nodes[1:]:
            forest.union(nodes[0], node)

    removed = 0
    blocks = []
    for members in forest.classes():
        points = [m + 1 for m in members if m < n]
        points += [-(m - 2 * n + 1) for m in members if m >= 2 * n]
        if points:
            blocks.append(tuple(points))
        else:
            removed += 1
    blocks.sort(key=lambda block: point_key(block[0], n))
    return ComposeResult(diagram=SeatPlan.trusted(n, tuple(blocks)), removed=removed)


def is_propagating(block: Iterable[int]) -> bool:
    """True if the block meets both rows."""
    points = list(block)
    return any(p > 0 for p in points) and any(p < 0 for p in points)


def propagating_number(w: SeatPlan) -> int:
    """Number of blocks meeting both the top and the bottom row."""
    return sum(1 for block in w.blocks if is_propagating(block))


def upper_parts(w: SeatPlan) -> List[Block]:
    """Top-row parts of the blocks, in canonical block order."""
    return [tuple(p for p in block if p > 0) for block in w.blocks if block[0] > 0]


def lower_parts(w: SeatPlan) -> List[Block]:
    """Bottom-row parts of the blocks (signed, so ``-j`` is j'), sorted by first point."""
    parts = [tuple(p for p in block if p < 0) for block in w.blocks if block[-1] < 0]
    return sorted(parts, key=lambda part: -part[0])


def involution_star(w: SeatPlan) -> SeatPlan:
    """Flip the diagram upside down by swapping primed and unprimed labels."""
    return make(w.n, [[-p for p in block] for block in w.blocks])


def has_fixed_last_strand(w: SeatPlan) -> bool:
    """True if n and n' share a block, i.e. w spans A_{n-1/2}(Q)."""
    return -w.n in w.block_of(w.n)


def _points(n: int) -> List[int]:
    return list(range(1, n + 1)) + list(range(-1, -n - 1, -1))


def enumerate_all(n: int, bound: int = DEFAULT_ENUMERATE_BOUND) -> Iterator[SeatPlan]:
    """Yield every seat-plan on n strands exactly once.

    Args:
        n: Number of strands
        bound: Largest n allowed (there are B_{2n} diagrams)

    Raises:
        BoundExceededError: If n exceeds the bound
    """
    if n > bound:
        raise BoundExceededError(f"Enumerating n={n} exceeds the bound {bound}")
    points = _points(n)
    for labels in restricted_growth_strings(2 * n):
        yield make(n, blocks_from_growth_string(points, labels))


def random_seatplan(n: int, rng: random.Random) -> SeatPlan:
    """Draw a seat-plan from a seeded generator."""
    points = _points(n)
    return make(n, blocks_from_growth_string(points, random_growth_string(2 * n, rng)))


def to_dot(w: SeatPlan) -> str:
    """Connectivity of a single diagram as an undirected DOT graph."""
    lines = ["graph seatplan {", "  rankdir=TB;"]
    top = " ".join(f'"{j}"' for j in range(1, w.n + 1))
    bottom = " ".join(f"\"{j}'\"" for j in range(1, w.n + 1))
    lines.append(f"  {{ rank=same; {top} }}")
    lines.append(f"  {{ rank=same; {bottom} }}")
    for block in w.blocks:
        for left, right in zip(block, block[1:]):
            lines.append(f'  "{format_point(left)}" -- "{format_point(right)}";')
    lines.append("}")
    return "\n".join(lines)
