"""Dense matrices over Q(Q) and their specializations to exact rationals."""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..exactratio import ONE, ZERO, RatFunc, Scalar
from ..utils.exceptions import SizeMismatchError

Matrix = List[List[RatFunc]]
RationalMatrix = List[List[Fraction]]


def zeros(size: int) -> Matrix:
    return [[ZERO] * size for _ in range(size)]


def identity(size: int) -> Matrix:
    matrix = zeros(size)
    for k in range(size):
        matrix[k][k] = ONE
    return matrix


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact product ``a · b``; zero entries of ``a`` are skipped.

    Raises:
        SizeMismatchError: If the inner dimensions differ
    """
    inner = len(b)
    if any(len(row) != inner for row in a):
        raise SizeMismatchError(f"Cannot multiply a {len(a)}x? matrix by a {inner}x? matrix")
    cols = len(b[0]) if b else 0
    result = [[ZERO] * cols for _ in a]
    for i, row in enumerate(a):
        out = result[i]
        for k, left in enumerate(row):
            if left.is_zero():
                continue
            for j, right in enumerate(b[k]):
                if not right.is_zero():
                    out[j] = out[j] + left * right
    return result


def mat_scale(a: Matrix, factor: RatFunc) -> Matrix:
    return [[factor * entry for entry in row] for row in a]


def first_difference(a: Matrix, b: Matrix) -> Optional[Tuple[int, int]]:
    """Position ``(row, col)`` of the first differing entry, or None when equal."""
    if len(a) != len(b):
        return (0, 0)
    for i, (row_a, row_b) in enumerate(zip(a, b)):
        for j, (x, y) in enumerate(zip(row_a, row_b)):
            if x != y:
                return i, j
    return None


def mat_equal(a: Matrix, b: Matrix) -> bool:
    return first_difference(a, b) is None


def trace(a: Matrix) -> RatFunc:
    total = ZERO
    for k, row in enumerate(a):
        total = total + row[k]
    return total


def specialize(a: Matrix, point: Scalar) -> RationalMatrix:
    """Evaluate every entry at ``Q = point``.

    Raises:
        PoleAtPointError: If an entry has a pole at the point
    """
    return [[entry.eval_at(point) for entry in row] for row in a]


def rational_mul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> RationalMatrix:
    cols = len(b[0]) if b else 0
    result = [[Fraction(0)] * cols for _ in a]
    for i, row in enumerate(a):
        out = result[i]
        for k, left in enumerate(row):
            if left:
                for j, right in enumerate(b[k]):
                    if right:
                        out[j] += left * right
    return result


def rational_identity(size: int) -> RationalMatrix:
    return [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]


def rational_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank by exact row echelon reduction over the rationals."""
    m = [list(row) for row in rows if any(row)]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    piv_r = 0
    for piv_c in range(n_cols):
        pivot = next((r for r in range(piv_r, n_rows) if m[r][piv_c] != 0), None)
        if pivot is None:
            continue
        m[piv_r], m[pivot] = m[pivot], m[piv_r]
        fp = m[piv_r][piv_c]
        for r in range(piv_r + 1, n_rows):
            fr = m[r][piv_c]
            if fr == 0:
                continue
            frp = fr / fp
            for c in range(piv_c, n_cols):
                if m[piv_r][c]:
                    m[r][c] -= m[piv_r][c] * frp
        piv_r += 1
        if piv_r == n_rows:
            break
    return piv_r


def format_grid(a: Matrix) -> List[str]:
    """Aligned dense grid, one line per row."""
    cells = [[str(entry) for entry in row] for row in a]
    width = max((len(cell) for row in cells for cell in row), default=1)
    return ["  ".join(cell.rjust(width) for cell in row) for row in cells]
