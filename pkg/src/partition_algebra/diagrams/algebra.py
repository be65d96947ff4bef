"""Elements of A_n(Q): Z[Q]-linear combinations of seat-plans."""

import re
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from ..exactratio import ONE_POLY, IntPoly, rf_parse
from ..utils.exceptions import ParseError, SizeMismatchError
from .seatplan import SeatPlan, compose, format_seatplan, identity, involution_star, parse_seatplan

Coefficient = Union[IntPoly, int]


class AlgElement:
    """A finite combination ``sum c_w [w]`` with nonzero coefficients in Z[Q].

    Elements are immutable; equality is structural on the stored terms.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Mapping[SeatPlan, Coefficient]] = None) -> None:
        self.n = n
        cleaned: Dict[SeatPlan, IntPoly] = {}
        for diagram, coefficient in (terms or {}).items():
            if diagram.n != n:
                raise SizeMismatchError(f"Diagram with n={diagram.n} in an element with n={n}")
            if isinstance(coefficient, int):
                coefficient = IntPoly.constant(coefficient)
            if coefficient:
                cleaned[diagram] = coefficient
        self.terms: Dict[SeatPlan, IntPoly] = cleaned

    @classmethod
    def basis(cls, diagram: SeatPlan, coefficient: Coefficient = 1) -> "AlgElement":
        return cls(diagram.n, {diagram: coefficient})

    @classmethod
    def one(cls, n: int) -> "AlgElement":
        return cls.basis(identity(n))

    @classmethod
    def zero(cls, n: int) -> "AlgElement":
        return cls(n)

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> Iterator[Tuple[SeatPlan, IntPoly]]:
        """Terms in the canonical diagram order."""
        for diagram in sorted(self.terms, key=lambda d: d.order_key):
            yield diagram, self.terms[diagram]

    def _check(self, other: "AlgElement") -> None:
        if self.n != other.n:
            raise SizeMismatchError(f"Cannot combine elements with n={self.n} and n={other.n}")

    def __add__(self, other: "AlgElement") -> "AlgElement":
        self._check(other)
        terms = dict(self.terms)
        for diagram, coefficient in other.terms.items():
            terms[diagram] = terms.get(diagram, IntPoly()) + coefficient
        return AlgElement(self.n, terms)

    def __neg__(self) -> "AlgElement":
        return AlgElement(self.n, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: "AlgElement") -> "AlgElement":
        return self + (-other)

    def scale(self, factor: Coefficient) -> "AlgElement":
        if isinstance(factor, int):
            factor = IntPoly.constant(factor)
        return AlgElement(self.n, {d: c * factor for d, c in self.terms.items()})

    def __mul__(self, other: "AlgElement") -> "AlgElement":
        self._check(other)
        terms: Dict[SeatPlan, IntPoly] = {}
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                product = compose(left, right)
                coefficient = a * b * IntPoly.monomial(1, product.removed)
                key = product.diagram
                terms[key] = terms.get(key, IntPoly()) + coefficient
        return AlgElement(self.n, terms)

    def star(self) -> "AlgElement":
        """Apply the anti-involution diagram by diagram, fixing coefficients."""
        return AlgElement(self.n, {involution_star(d): c for d, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"AlgElement(n={self.n}, {self})"

    def __str__(self) -> str:
        return format_element(self)


def elem_mul(a: AlgElement, b: AlgElement) -> AlgElement:
    """Bilinear extension of diagram composition; each product picks up Q^removed.

    Raises:
        SizeMismatchError: If the strand counts differ
    """
    return a * b


def elem_add(a: AlgElement, b: AlgElement) -> AlgElement:
    return a + b


def elem_scale(a: AlgElement, factor: Coefficient) -> AlgElement:
    return a.scale(factor)


def elem_equal(a: AlgElement, b: AlgElement) -> bool:
    if a.n != b.n:
        raise SizeMismatchError(f"Cannot compare elements with n={a.n} and n={b.n}")
    return a == b


def format_coefficient(c: IntPoly) -> str:
    text = str(c)
    return f"({text})" if c.term_count > 1 else text


def format_term(diagram: SeatPlan, coefficient: IntPoly) -> str:
    return f"{format_coefficient(coefficient)} * {format_seatplan(diagram)}"


def format_element(a: AlgElement) -> str:
    """Render as ``Q^2 * {{...}} + (Q - 1) * {{...}}``; the zero element is ``0``."""
    if a.is_zero():
        return "0"
    return " + ".join(format_term(d, c) for d, c in a.items())


def _split_top_level(text: str) -> List[Tuple[str, int]]:
    pieces = []
    depth = 0
    start = 0
    for pos, ch in enumerate(text):
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        elif ch == "+" and depth == 0:
            pieces.append((text[start:pos], start))
            start = pos + 1
    pieces.append((text[start:], start))
    return pieces


def parse_element(text: str, n: Optional[int] = None) -> AlgElement:
    """Parse the text form produced by :func:`format_element`.

    Each term is ``coefficient * {{...}}`` or a bare diagram (coefficient 1).

    Raises:
        ParseError: If a term or coefficient is malformed
    """
    stripped = text.strip()
    if stripped == "0":
        if n is None:
            raise ParseError("Strand count is required to parse the zero element")
        return AlgElement.zero(n)

    parsed: List[Tuple[SeatPlan, IntPoly]] = []
    for piece, offset in _split_top_level(text):
        brace = piece.find("{")
        if brace < 0:
            raise ParseError("Term without a diagram", offset)
        coefficient_text = piece[:brace].strip()
        coefficient = ONE_POLY
        if coefficient_text:
            if not coefficient_text.endswith("*"):
                raise ParseError("Expected '*' between coefficient and diagram", offset + brace)
            value = rf_parse(coefficient_text[:-1])
            if not value.is_polynomial():
                raise ParseError("Coefficients must be polynomials in Q", offset)
            coefficient = value.num
        parsed.append((parse_seatplan(piece[brace:], n), coefficient))

    strands = {diagram.n for diagram, _ in parsed}
    if len(strands) != 1:
        raise SizeMismatchError(f"Terms have different strand counts: {sorted(strands)}")
    result = AlgElement.zero(strands.pop())
    for diagram, coefficient in parsed:
        result = result + AlgElement.basis(diagram, coefficient)
    return result


_POWER_TERM = re.compile(r"^\s*Q\^(\d+)\s*\*\s*(\{.*\})\s*$")


def format_power_term(diagram: SeatPlan, power: int) -> str:
    """Render ``Q^p * {{...}}``, always writing the exponent."""
    return f"Q^{power} * {format_seatplan(diagram)}"


def parse_power_term(text: str, n: Optional[int] = None) -> Tuple[SeatPlan, int]:
    """Inverse of :func:`format_power_term`."""
    match = _POWER_TERM.match(text)
    if not match:
        raise ParseError(f"Expected 'Q^p * {{...}}', got {text!r}")
    return parse_seatplan(match.group(2), n), int(match.group(1))
