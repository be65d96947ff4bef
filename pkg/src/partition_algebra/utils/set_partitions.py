"""Set-partition enumeration by restricted growth strings."""

import random
from typing import Iterator, List, Sequence, Tuple, TypeVar

T = TypeVar("T")


def restricted_growth_strings(size: int) -> Iterator[Tuple[int, ...]]:
    """Yield every restricted growth string of the given length in lexicographic order.

    A restricted growth string ``r`` has ``r[0] == 0`` and
    ``r[k] <= 1 + max(r[:k])``; each one encodes exactly one set partition.

    Examples:
        >>> list(restricted_growth_strings(2))
        [(0, 0), (0, 1)]
    """
    if size == 0:
        yield ()
        return

    labels = [0] * size

    def extend(position: int, top: int) -> Iterator[Tuple[int, ...]]:
        if position == size:
            yield tuple(labels)
            return
        for label in range(top + 2):
            labels[position] = label
            yield from extend(position + 1, max(top, label))

    yield from extend(1, 0)


def random_growth_string(size: int, rng: random.Random) -> Tuple[int, ...]:
    """Draw one restricted growth string, each position choosing among its allowed labels."""
    labels: List[int] = []
    top = -1
    for _ in range(size):
        label = rng.randint(0, top + 1)
        labels.append(label)
        top = max(top, label)
    return tuple(labels)


def blocks_from_growth_string(items: Sequence[T], labels: Sequence[int]) -> List[List[T]]:
    """Group ``items`` by the labels of a restricted growth string."""
    blocks: List[List[T]] = [[] for _ in range(max(labels, default=-1) + 1)]
    for item, label in zip(items, labels):
        blocks[label].append(item)
    return blocks


def bell_number(m: int) -> int:
    """Number of set partitions of an m-element set, from the Bell triangle.

    Examples:
        >>> [bell_number(m) for m in range(7)]
        [1, 1, 2, 5, 15, 52, 203]
    """
    row = [1]
    for _ in range(m):
        next_row = [row[-1]]
        for value in row:
            next_row.append(next_row[-1] + value)
        row = next_row
    return row[0]
