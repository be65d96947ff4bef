"""The Bratteli graph of Q-augmented Young diagrams and its paths (tableaux).

At an integer level k the vertices are ``~λ`` (tilde shapes, first row
``Q - |λ|``) with ``|λ| <= k``; at a half level ``k + 1/2`` they are ``^λ``
(hat shapes, first row ``Q - 1 - |λ|``) with ``|λ| <= k``. A tilde shape
``~λ`` is joined to ``^λ`` and to ``^μ`` for every μ obtained by removing a
box of λ; these are the only edges, between consecutive levels.

Levels are half-integers; internally they are doubled to integers.
"""

import re
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..utils.exceptions import (
    BoundExceededError,
    InvalidDirectionError,
    ParseError,
    ShapeNotAtLevelError,
)

LevelLike = Union[int, Fraction, str]


def to_doubled(level: LevelLike) -> int:
    """Convert a level such as ``3``, ``Fraction(5, 2)``, ``"5/2"`` or ``"2.5"`` to twice its value.

    Raises:
        ParseError: If the level is not a non-negative multiple of 1/2
    """
    try:
        value = Fraction(level.strip()) if isinstance(level, str) else Fraction(level)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"Invalid level {level!r}") from e
    doubled = value * 2
    if doubled.denominator != 1 or doubled < 0:
        raise ParseError(f"Level must be a non-negative multiple of 1/2, got {level!r}")
    return int(doubled)


def format_level(doubled: int) -> str:
    return str(doubled // 2) if doubled % 2 == 0 else f"{doubled}/2"


class Partition(BaseModel):
    """A weakly decreasing sequence of positive integers; the empty partition is ∅."""

    model_config = ConfigDict(frozen=True)

    parts: Tuple[int, ...] = Field(default=(), description="Row lengths, weakly decreasing")

    @field_validator("parts")
    @classmethod
    def validate_parts(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        """Ensure parts are positive and weakly decreasing."""
        if any(p <= 0 for p in v):
            raise ValueError(f"Partition parts must be positive, got {v}")
        if any(a < b for a, b in zip(v, v[1:])):
            raise ValueError(f"Partition parts must be weakly decreasing, got {v}")
        return v

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> Tuple[int, ...]:
        """Column lengths."""
        if not self.parts:
            return ()
        return tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1))

    def hook(self, row: int, col: int) -> int:
        """Hook length of the box in 1-based ``(row, col)``."""
        return self.parts[row - 1] - col + self.conjugate()[col - 1] - row + 1

    def removable_rows(self) -> List[int]:
        """Rows (1-based) whose last box can be removed."""
        parts = self.parts
        return [r for r in range(1, len(parts) + 1) if r == len(parts) or parts[r - 1] > parts[r]]

    def addable_rows(self) -> List[int]:
        """Rows (1-based) where a box can be added; the last one starts a new row."""
        parts = self.parts
        return [r for r in range(1, len(parts) + 2) if r == 1 or parts[r - 2] > _part(parts, r)]

    def remove_box(self, row: int) -> "Partition":
        parts = list(self.parts)
        parts[row - 1] -= 1
        return Partition(parts=tuple(p for p in parts if p))

    def add_box(self, row: int) -> "Partition":
        parts = list(self.parts)
        if row == len(parts) + 1:
            parts.append(1)
        else:
            parts[row - 1] += 1
        return Partition(parts=tuple(parts))

    def removed_box(self, smaller: "Partition") -> Tuple[int, int]:
        """The box ``(row, col)`` of self missing from ``smaller``, if they differ by one box.

        Raises:
            ValueError: If ``smaller`` is not self minus one box
        """
        for row in self.removable_rows():
            if self.remove_box(row) == smaller:
                return row, self.parts[row - 1]
        raise ValueError(f"{smaller.text()} is not {self.text()} minus one box")

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Canonical order: by size, then parts lexicographically descending."""
        return self.size, tuple(-p for p in self.parts)

    def text(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


def _part(parts: Tuple[int, ...], row: int) -> int:
    return parts[row - 1] if row <= len(parts) else 0


EMPTY = Partition()


def partitions_of(size: int) -> List[Partition]:
    """All partitions of ``size`` in canonical order, e.g. ``[2]`` before ``[1,1]``."""

    def build(remaining: int, largest: int) -> List[Tuple[int, ...]]:
        if remaining == 0:
            return [()]
        result = []
        for first in range(min(remaining, largest), 0, -1):
            result += [(first,) + rest for rest in build(remaining - first, first)]
        return result

    return [Partition(parts=p) for p in build(size, size)]


class ShapeKind(str, Enum):
    """Augmented shape types."""

    TILDE = "~"  # first row Q - |λ|, at integer levels
    HAT = "^"  # first row Q - 1 - |λ|, at half levels


class Direction(str, Enum):
    """Box moves along an edge."""

    DOWN = "down"  # remove a box: tilde -> hat
    UP = "up"  # add a box: hat -> tilde


class AugShape(BaseModel):
    """A Q-augmented Young diagram ``~λ`` or ``^λ``."""

    model_config = ConfigDict(frozen=True)

    kind: ShapeKind
    core: Partition = Field(default_factory=Partition, description="Rows below the first")

    @classmethod
    def tilde(cls, *parts: int) -> "AugShape":
        return cls(kind=ShapeKind.TILDE, core=Partition(parts=parts))

    @classmethod
    def hat(cls, *parts: int) -> "AugShape":
        return cls(kind=ShapeKind.HAT, core=Partition(parts=parts))

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return self.core.sort_key

    def __str__(self) -> str:
        return f"{self.kind.value}{self.core.text()}"


_SHAPE = re.compile(r"\s*([~^])\s*\[\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)\]\s*")


def parse_shape(text: str) -> AugShape:
    """Parse ``~[2,1]`` or ``^[]``.

    Raises:
        ParseError: If the text is not a shape or the parts are not a partition
    """
    match = _SHAPE.fullmatch(text)
    if not match:
        raise ParseError(f"Invalid shape {text!r}; expected e.g. '~[2,1]' or '^[]'")
    parts = tuple(int(p) for p in match.group(2).split(",")) if match.group(2).strip() else ()
    try:
        core = Partition(parts=parts)
    except ValueError as e:
        raise ParseError(f"Invalid shape {text!r}: parts must be weakly decreasing") from e
    return AugShape(kind=ShapeKind(match.group(1)), core=core)


class Tableau(BaseModel):
    """A path ``~∅ = α(0), α(1/2), ..., α(L)`` in the Bratteli graph."""

    model_config = ConfigDict(frozen=True)

    shapes: Tuple[AugShape, ...] = Field(description="Shapes at levels 0, 1/2, 1, ...")

    @property
    def doubled_level(self) -> int:
        return len(self.shapes) - 1

    @property
    def target(self) -> AugShape:
        return self.shapes[-1]

    @property
    def sort_key(self) -> Tuple[Tuple[int, Tuple[int, ...]], ...]:
        return tuple(shape.sort_key for shape in self.shapes)

    def __str__(self) -> str:
        return " ".join(str(shape) for shape in self.shapes)


def parse_tableau(text: str) -> Tableau:
    """Parse the level-ordered shape list ``~[] ^[] ~[1] ^[] ~[]``.

    Raises:
        ParseError: If a shape is malformed or consecutive shapes are not joined
    """
    tokens = re.findall(r"[~^]\s*\[[^\]]*\]", text)
    if not tokens or "".join(tokens).replace(" ", "") != text.replace(" ", ""):
        raise ParseError(f"Invalid tableau {text!r}")
    shapes = tuple(parse_shape(token) for token in tokens)
    tableau = Tableau(shapes=shapes)
    if not is_path(tableau):
        raise ParseError(f"{text!r} is not a path from ~[] in the Bratteli graph")
    return tableau


def in_level(shape: AugShape, doubled: int) -> bool:
    """True if the shape is a vertex at the (doubled) level."""
    if doubled % 2 == 0:
        return shape.kind == ShapeKind.TILDE and shape.core.size <= doubled // 2
    return shape.kind == ShapeKind.HAT and shape.core.size <= (doubled - 1) // 2


def vertices(level: LevelLike) -> List[AugShape]:
    """Vertices at a level, in canonical order.

    Examples:
        >>> [str(v) for v in vertices(2)]
        ['~[]', '~[1]', '~[2]', '~[1,1]']
    """
    doubled = to_doubled(level)
    kind = ShapeKind.TILDE if doubled % 2 == 0 else ShapeKind.HAT
    largest = doubled // 2
    return [AugShape(kind=kind, core=p) for size in range(largest + 1) for p in partitions_of(size)]


def neighbors(shape: AugShape, direction: Direction) -> List[AugShape]:
    """Shapes joined to ``shape`` by removing (tilde) or adding (hat) one box.

    ``~λ`` down gives ``^λ`` (the first-row box) and ``^μ`` for each μ = λ
    minus a box; ``^μ`` up gives ``~μ`` and ``~ν`` for each ν = μ plus a box.

    Raises:
        InvalidDirectionError: For a hat shape going down or a tilde shape going up
    """
    core = shape.core
    if shape.kind == ShapeKind.TILDE:
        if direction != Direction.DOWN:
            raise InvalidDirectionError(f"{shape} only has neighbors by removing a box")
        smaller = [core.remove_box(r) for r in core.removable_rows()]
        return [AugShape(kind=ShapeKind.HAT, core=p) for p in [core] + smaller]
    if direction != Direction.UP:
        raise InvalidDirectionError(f"{shape} only has neighbors by adding a box")
    larger = sorted((core.add_box(r) for r in core.addable_rows()), key=lambda p: p.sort_key)
    return [AugShape(kind=ShapeKind.TILDE, core=p) for p in [core] + larger]


def _adjacent(shape: AugShape) -> List[AugShape]:
    direction = Direction.DOWN if shape.kind == ShapeKind.TILDE else Direction.UP
    return neighbors(shape, direction)


def lower_neighbors(shape: AugShape, doubled: int) -> List[AugShape]:
    """Neighbors of a vertex at the given level that sit one half-level below."""
    return [v for v in _adjacent(shape) if in_level(v, doubled - 1)]


def is_path(tableau: Tableau) -> bool:
    shapes = tableau.shapes
    if not shapes or shapes[0] != AugShape.tilde():
        return False
    for doubled, (prev, cur) in enumerate(zip(shapes, shapes[1:]), start=1):
        if not in_level(cur, doubled) or cur not in _adjacent(prev):
            return False
    return True


@lru_cache(maxsize=None)
def _paths(shape: AugShape, doubled: int) -> Tuple[Tableau, ...]:
    if doubled == 0:
        return (Tableau(shapes=(shape,)),) if shape == AugShape.tilde() else ()
    result = []
    for prev in lower_neighbors(shape, doubled):
        result += [Tableau(shapes=t.shapes + (shape,)) for t in _paths(prev, doubled - 1)]
    return tuple(sorted(result, key=lambda t: t.sort_key))


def tableaux(target: AugShape, level: LevelLike) -> List[Tableau]:
    """All paths from ``~[]`` to ``target``, in canonical (lexicographic) order.

    Raises:
        ShapeNotAtLevelError: If ``target`` is not a vertex at ``level``
    """
    doubled = to_doubled(level)
    if not in_level(target, doubled):
        raise ShapeNotAtLevelError(f"{target} is not a vertex at level {format_level(doubled)}")
    return list(_paths(target, doubled))


@lru_cache(maxsize=None)
def _dimension(shape: AugShape, doubled: int) -> int:
    if doubled == 0:
        return 1 if shape == AugShape.tilde() else 0
    return sum(_dimension(prev, doubled - 1) for prev in lower_neighbors(shape, doubled))


def dimension(target: AugShape, level: LevelLike) -> int:
    """Number of tableaux of ``target``, by the branching recursion.

    Raises:
        ShapeNotAtLevelError: If ``target`` is not a vertex at ``level``
    """
    doubled = to_doubled(level)
    if not in_level(target, doubled):
        raise ShapeNotAtLevelError(f"{target} is not a vertex at level {format_level(doubled)}")
    return _dimension(target, doubled)


def dims(level: LevelLike) -> Dict[AugShape, int]:
    """Dimension of every vertex at a level, in canonical vertex order."""
    return {v: dimension(v, level) for v in vertices(level)}


def graph_export(level: LevelLike, bound: int = 4) -> str:
    """The graph up to ``level`` as undirected DOT text.

    Node ids are ``L<doubled>_<index>``; labels use the ``~[2,1]`` text form.

    Raises:
        BoundExceededError: If the level exceeds ``bound``
    """
    doubled = to_doubled(level)
    if doubled > 2 * bound:
        raise BoundExceededError(f"Level {format_level(doubled)} exceeds the bound {bound}")

    ids: Dict[Tuple[int, AugShape], str] = {}
    lines = ["graph bratteli {", "  rankdir=TB;"]
    for d in range(doubled + 1):
        row = vertices(Fraction(d, 2))
        names = []
        for index, shape in enumerate(row):
            node = f"L{d}_{index}"
            ids[(d, shape)] = node
            names.append(node)
            lines.append(f'  {node} [label="{shape}"];')
        lines.append(f"  {{ rank=same; {' '.join(names)} }}")
    for d in range(1, doubled + 1):
        for shape in vertices(Fraction(d, 2)):
            for prev in lower_neighbors(shape, d):
                lines.append(f"  {ids[(d - 1, prev)]} -- {ids[(d, shape)]};")
    lines.append("}")
    return "\n".join(lines)
