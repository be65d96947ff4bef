"""Young's seminormal matrices for the generators of A_n(Q).

Every irreducible module is indexed by a vertex of the Bratteli graph and has
a basis ``v_P`` indexed by the tableaux ``P`` of that vertex, in canonical
order. Column ``P`` of a generator matrix holds the image of ``v_P``, and the
matrix of a word is the product of its letters' matrices in word order.

* ``E_i`` and ``F_i`` are built from ratios of augmented hook products;
* ``S_i`` is built from axial distances on non-reductive paths and from the
  tabulated blocks in :mod:`.tables` on reductive ones.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field
from rich.console import Console

from ..diagrams.relations import half_generators
from ..diagrams.seatplan import enumerate_all
from ..diagrams.standardform import Letter, LetterTag, Word, span_words, standard_word
from ..exactratio import ONE, Q, RatFunc, Scalar
from ..utils.console import progress
from ..utils.exceptions import (
    CoordinateOutOfRangeError,
    DivisionByZeroError,
    NotACoveringChainError,
    NotOneBoxApartError,
)
from .bratteli import (
    AugShape,
    LevelLike,
    Partition,
    ShapeKind,
    Tableau,
    format_level,
    tableaux,
    to_doubled,
    vertices,
)
from .matrices import (
    Matrix,
    RationalMatrix,
    identity,
    mat_mul,
    rational_identity,
    rational_mul,
    rational_rank,
    specialize,
    trace,
    zeros,
)
from .tables import ReductiveTables, default_tables

CValue = Union[Scalar, RatFunc]


def hook_ratio(big: AugShape, small: AugShape) -> RatFunc:
    """Ratio ``h(big) / h(small)`` of augmented hook products.

    ``big`` is a tilde shape and ``small`` the hat shape left after removing
    one box: either the last box of the first (Q-dependent) row, leaving the
    core unchanged, or a removable core box. Only hooks in the removed box's
    row and column change.

    Raises:
        NotOneBoxApartError: If ``small`` is not ``big`` minus one box

    Examples:
        >>> str(hook_ratio(AugShape.tilde(2), AugShape.hat(1)))
        '(2*Q - 4) / (Q - 3)'
    """
    if big.kind != ShapeKind.TILDE or small.kind != ShapeKind.HAT:
        raise NotOneBoxApartError(f"{small} is not obtained from {big} by removing a box")
    lam = big.core
    conj = lam.conjugate()
    first_row = Q - lam.size

    def first_row_factor(col: int) -> RatFunc:
        hook = first_row - col + conj[col - 1]
        return (hook + 1) / hook

    if small.core == lam:
        ratio = first_row - (lam.parts[0] if lam.parts else 0)
        for col in range(1, len(conj) + 1):
            ratio = ratio * first_row_factor(col)
        return ratio

    try:
        row, col = lam.removed_box(small.core)
    except ValueError as e:
        raise NotOneBoxApartError(f"{small} is not obtained from {big} by removing a box") from e
    integral = Fraction(1)
    for j in range(1, col):
        hook = lam.hook(row, j)
        integral *= Fraction(hook, hook - 1)
    for r in range(1, row):
        hook = lam.hook(r, col)
        integral *= Fraction(hook, hook - 1)
    return first_row_factor(col) * integral


def _covering_box(larger: Partition, smaller: Partition) -> Tuple[int, int]:
    try:
        return larger.removed_box(smaller)
    except ValueError as e:
        raise NotACoveringChainError(f"{larger.text()} does not cover {smaller.text()}") from e


def axial_distance(nu: Partition, mu: Partition, lam: Partition) -> int:
    """Content of the box ``lam/mu`` minus the content of the box ``mu/nu``.

    Raises:
        NotACoveringChainError: If the partitions do not each add one box

    Examples:
        >>> axial_distance(Partition(), Partition(parts=(1,)), Partition(parts=(1, 1)))
        -1
    """
    r0, c0 = _covering_box(mu, nu)
    r1, c1 = _covering_box(lam, mu)
    return (c1 - r1) - (c0 - r0)


class AxialData(BaseModel):
    """Entries of a two-path block ``[[a, b/c], [c, -a]]``."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    d: int = Field(description="Axial distance, nonzero")
    c: RatFunc = Field(description="Free nonzero off-diagonal scale")

    @property
    def a(self) -> RatFunc:
        return RatFunc.coerce(Fraction(1, self.d))

    @property
    def b(self) -> RatFunc:
        return ONE - self.a * self.a

    def block(self) -> Matrix:
        return [[self.a, self.b / self.c], [self.c, -self.a]]


class RepMatrix(BaseModel):
    """A generator image on one irreducible module."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    target: AugShape
    doubled_level: int
    letter: Letter
    basis: Tuple[Tableau, ...] = Field(description="Row and column order")
    entries: Tuple[Tuple[RatFunc, ...], ...]

    @property
    def size(self) -> int:
        return len(self.basis)

    def matrix(self) -> Matrix:
        return [list(row) for row in self.entries]

    def header(self) -> List[str]:
        level = format_level(self.doubled_level)
        lines = [f"# {self.letter} on {self.target} at level {level}, dimension {self.size}"]
        lines += [f"# {k}: {tableau}" for k, tableau in enumerate(self.basis, start=1)]
        return lines


def letter_available(letter: Letter, doubled: int) -> bool:
    """True if the letter acts on modules at the (doubled) level."""
    reach = {LetterTag.E: 0, LetterTag.F: 1, LetterTag.S: 2}[letter.tag]
    return 2 * letter.index + reach <= doubled


def _groups(
    basis: Sequence[Tableau], varying: Sequence[int]
) -> Dict[Tuple[AugShape, ...], List[int]]:
    """Indices of tableaux that agree outside the ``varying`` coordinates."""
    groups: Dict[Tuple[AugShape, ...], List[int]] = {}
    skip = set(varying)
    for k, tableau in enumerate(basis):
        key = tuple(s for pos, s in enumerate(tableau.shapes) if pos not in skip)
        groups.setdefault(key, []).append(k)
    return groups


class SeminormalForm:
    """Generator matrices for one choice of ``c`` and of reductive tables.

    Matrices are cached per (letter, target, level).
    """

    def __init__(
        self,
        c: CValue = 1,
        tables: Optional[ReductiveTables] = None,
    ):
        self.c = RatFunc.coerce(c)
        if self.c.is_zero():
            raise DivisionByZeroError("The off-diagonal scale c must be nonzero")
        self.tables = tables if tables is not None else default_tables()
        self._cache: Dict[Tuple[Letter, AugShape, int], RepMatrix] = {}

    def _check(self, letter: Letter, doubled: int) -> None:
        if not letter_available(letter, doubled):
            raise CoordinateOutOfRangeError(
                f"{letter} does not act at level {format_level(doubled)}"
            )

    def generator(self, letter: Letter, target: AugShape, level: LevelLike) -> RepMatrix:
        """Image of one letter on the module of ``target``.

        Raises:
            CoordinateOutOfRangeError: If the letter does not act at this level
            ShapeNotAtLevelError: If ``target`` is not a vertex at the level
            ReductiveUnsupportedError: For an untabulated reductive S block
        """
        doubled = to_doubled(level)
        key = (letter, target, doubled)
        if key not in self._cache:
            self._check(letter, doubled)
            basis = tableaux(target, level)
            if letter.tag == LetterTag.E:
                entries = self._e_entries(letter.index, basis)
            elif letter.tag == LetterTag.F:
                entries = self._f_entries(letter.index, basis)
            else:
                entries = self._s_entries(letter.index, basis)
            self._cache[key] = RepMatrix(
                target=target,
                doubled_level=doubled,
                letter=letter,
                basis=tuple(basis),
                entries=tuple(tuple(row) for row in entries),
            )
        return self._cache[key]

    def _e_entries(self, i: int, basis: Sequence[Tableau]) -> Matrix:
        matrix = zeros(len(basis))
        for members in _groups(basis, [2 * i - 1]).values():
            shapes = basis[members[0]].shapes
            big = shapes[2 * i - 2]
            if big != shapes[2 * i]:
                continue
            for r in members:
                value = hook_ratio(big, basis[r].shapes[2 * i - 1])
                for col in members:
                    matrix[r][col] = value
        return matrix

    def _f_entries(self, i: int, basis: Sequence[Tableau]) -> Matrix:
        matrix = zeros(len(basis))
        for members in _groups(basis, [2 * i]).values():
            shapes = basis[members[0]].shapes
            small = shapes[2 * i - 1]
            if small != shapes[2 * i + 1]:
                continue
            for col in members:
                value = hook_ratio(basis[col].shapes[2 * i], small).inverse()
                for r in members:
                    matrix[r][col] = value
        return matrix

    def _s_entries(self, i: int, basis: Sequence[Tableau]) -> Matrix:
        matrix = zeros(len(basis))
        for members in _groups(basis, [2 * i - 1, 2 * i, 2 * i + 1]).values():
            shapes = basis[members[0]].shapes
            nu, lam = shapes[2 * i - 2].core, shapes[2 * i + 2].core
            if lam.size == nu.size + 2:
                mus = [basis[k].shapes[2 * i].core for k in members]
                if len(members) == 1:
                    block = [[AxialData(d=axial_distance(nu, mus[0], lam), c=self.c).a]]
                else:
                    block = AxialData(d=axial_distance(nu, mus[0], lam), c=self.c).block()
            else:
                keys = [basis[k].shapes[2 * i - 2 : 2 * i + 3] for k in members]
                block = self.tables.lookup(i, keys)
            for r_pos, r in enumerate(members):
                for c_pos, col in enumerate(members):
                    matrix[r][col] = block[r_pos][c_pos]
        return matrix

    def word(self, word: Word, target: AugShape, level: LevelLike) -> Matrix:
        """Product of the letters' matrices in word order."""
        doubled = to_doubled(level)
        for letter in word.letters:
            self._check(letter, doubled)
        result = identity(len(tableaux(target, level)))
        for letter in word.letters:
            result = mat_mul(result, self.generator(letter, target, level).matrix())
        return result

    def traces(self, word: Word, level: LevelLike) -> Dict[AugShape, RatFunc]:
        return {v: trace(self.word(word, v, level)) for v in vertices(level)}

    def specialized(
        self, letter: Letter, target: AugShape, level: LevelLike, q0: Scalar
    ) -> RationalMatrix:
        return specialize(self.generator(letter, target, level).matrix(), q0)


@lru_cache(maxsize=8)
def _form(c: RatFunc) -> SeminormalForm:
    return SeminormalForm(c=c)


def _letter(tag: LetterTag, i: int) -> Letter:
    return Letter(tag=tag, index=i)


def e_matrix(i: int, target: AugShape, level: LevelLike) -> RepMatrix:
    """Image of ``e_i``: constant rows ``h(~λ)/h(row's shape at i-1/2)`` on blocks over ``~λ``."""
    return _form(ONE).generator(_letter(LetterTag.E, i), target, level)


def f_matrix(i: int, target: AugShape, level: LevelLike) -> RepMatrix:
    """Image of ``f_i``: constant columns ``h(^μ)/h(column's shape at i)`` on blocks over ``^μ``."""
    return _form(ONE).generator(_letter(LetterTag.F, i), target, level)


def s_matrix(i: int, target: AugShape, level: LevelLike, c: CValue = 1) -> RepMatrix:
    """Image of ``s_i`` for the off-diagonal scale ``c``."""
    return _form(RatFunc.coerce(c)).generator(_letter(LetterTag.S, i), target, level)


def rep_of_word(
    word: Word, target: AugShape, level: LevelLike, c: CValue = 1
) -> Matrix:
    """Matrix of a word on the module of ``target``; the empty word gives the identity."""
    return _form(RatFunc.coerce(c)).word(word, target, level)


def trace_of(word: Word, level: LevelLike, c: CValue = 1) -> Dict[AugShape, RatFunc]:
    """Trace of a word on every irreducible module at the level."""
    return _form(RatFunc.coerce(c)).traces(word, level)


def _rank_words(doubled: int) -> List[Word]:
    if doubled % 2 == 0:
        return [standard_word(w) for w in enumerate_all(doubled // 2)]
    n = (doubled + 1) // 2
    return [word for word, _ in span_words(n, half_generators(n)).values()]


def faithfulness_rank(
    level: LevelLike,
    q0: Scalar = 101,
    c: CValue = 1,
    console: Optional[Console] = None,
) -> int:
    """Rank of the diagram basis in the direct sum of all modules, specialized at ``Q = q0``.

    At an integer level n the rows are the standard words of all B_{2n}
    diagrams; at ``n - 1/2`` they are one word for each of the B_{2n-1}
    diagrams joining n and n'. Each row concatenates the specialized matrix
    entries over every vertex.

    Raises:
        PoleAtPointError: If some generator entry has a pole at ``q0``
    """
    doubled = to_doubled(level)
    form = SeminormalForm(c=c)
    targets = vertices(level)
    words = _rank_words(doubled)
    cache: Dict[Tuple[Letter, AugShape], RationalMatrix] = {}

    def image(word: Word, target: AugShape) -> RationalMatrix:
        result = rational_identity(len(tableaux(target, level)))
        for letter in word.letters:
            key = (letter, target)
            if key not in cache:
                cache[key] = form.specialized(letter, target, level, q0)
            result = rational_mul(result, cache[key])
        return result

    rows: List[List[Fraction]] = []
    for word in progress(words, console, f"Specializing at Q={q0}"):
        row: List[Fraction] = []
        for target in targets:
            for line in image(word, target):
                row.extend(line)
        rows.append(row)
    rank = rational_rank(rows)
    if console is not None:
        console.print(
            f"[dim]Rank at level {format_level(doubled)}, Q={q0}: {rank} of {len(rows)}[/dim]"
        )
    return rank


def iter_generators(doubled: int, n_max: int) -> Iterable[Letter]:
    """Every letter that acts at the (doubled) level, in the order E, F, S by index."""
    for tag in (LetterTag.E, LetterTag.F, LetterTag.S):
        for i in range(1, n_max + 1):
            letter = _letter(tag, i)
            if letter_available(letter, doubled):
                yield letter
