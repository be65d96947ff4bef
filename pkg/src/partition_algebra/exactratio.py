"""Exact arithmetic in Z[Q] and in its fraction field Q(Q).

All representation matrices live over the rational function field in one
indeterminate Q. Values are immutable and always stored in canonical form, so
equality is a comparison of coefficient tuples.

Canonical form of a rational function ``num / den``:

* ``num`` and ``den`` have integer coefficients and no common factor in Z[Q]
  (neither a polynomial factor nor an integer one);
* ``den`` has a positive leading coefficient;
* zero is stored as ``0 / 1``.
"""

from fractions import Fraction
from typing import Iterable, List, Tuple, Union

from .utils.exceptions import DivisionByZeroError, ParseError, PoleAtPointError

Scalar = Union[int, Fraction]


class IntPoly:
    """Polynomial in Q with arbitrary-precision integer coefficients.

    ``coeffs[k]`` is the coefficient of ``Q^k``; trailing zeros are stripped so
    the zero polynomial has no coefficients at all.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        values = [int(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs: Tuple[int, ...] = tuple(values)

    @classmethod
    def constant(cls, value: int) -> "IntPoly":
        return cls((value,))

    @classmethod
    def monomial(cls, coefficient: int, degree: int) -> "IntPoly":
        """Return ``coefficient * Q^degree``."""
        return cls([0] * degree + [coefficient])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for zero."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def term_count(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def content(self) -> int:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        result = 0
        for c in self.coeffs:
            result = _int_gcd(result, c)
            if result == 1:
                break
        return result

    def primitive_part(self) -> "IntPoly":
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        content = self.content()
        if self.leading < 0:
            content = -content
        return IntPoly(c // content for c in self.coeffs)

    def exact_quotient(self, divisor: int) -> "IntPoly":
        """Divide every coefficient by an integer that divides all of them."""
        return IntPoly(c // divisor for c in self.coeffs)

    def evaluate(self, point: Scalar) -> Fraction:
        """Evaluate at an exact rational point using Horner's rule."""
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * point + c
        return value

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + y for x, y in zip(a, b)] + list(a[len(b) :]))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    product[i + j] += x * y
        return IntPoly(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPoly":
        result = IntPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        """Render as ``Q^2 - 3*Q + 4``; a coefficient of 1 is omitted."""
        if not self.coeffs:
            return "0"
        pieces: List[str] = []
        for degree in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[degree]
            if c == 0:
                continue
            magnitude = abs(c)
            if degree == 0:
                body = str(magnitude)
            else:
                mono = "Q" if degree == 1 else f"Q^{degree}"
                body = mono if magnitude == 1 else f"{magnitude}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)


ZERO_POLY = IntPoly()
ONE_POLY = IntPoly.constant(1)
Q_POLY = IntPoly((0, 1))


def _int_gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """Remainder of ``lc(b)^k * a`` modulo ``b``, computed without fractions."""
    rem = list(a.coeffs)
    lead = b.leading
    db = b.degree
    while len(rem) - 1 >= db and rem:
        top = rem[-1]
        shift = len(rem) - 1 - db
        rem = [lead * c for c in rem]
        for j, c in enumerate(b.coeffs):
            rem[shift + j] -= top * c
        while rem and rem[-1] == 0:
            rem.pop()
    return IntPoly(rem)


def _primitive_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Gcd of two primitive polynomials by a primitive remainder sequence."""
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        rem = _pseudo_remainder(a, b)
        a, b = b, rem.primitive_part()
    return a.primitive_part()


def _divide_exact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient ``a / b`` when ``b`` divides ``a`` in Z[Q]."""
    rem = list(a.coeffs)
    db = b.degree
    lead = b.leading
    quotient = [0] * (a.degree - db + 1)
    for k in range(len(quotient) - 1, -1, -1):
        top = rem[k + db]
        if top % lead:
            raise ValueError(f"{b} does not divide {a} over the integers")
        q = top // lead
        quotient[k] = q
        if q:
            for j, c in enumerate(b.coeffs):
                rem[k + j] -= q * c
    if any(rem):
        raise ValueError(f"{b} does not divide {a}")
    return IntPoly(quotient)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Greatest common divisor in Z[Q], normalized to a positive leading coefficient.

    Examples:
        >>> str(poly_gcd(IntPoly([-2, 0, 2]), IntPoly([-4, 4])))
        '2*Q - 2'
    """
    if a.is_zero():
        return b.primitive_part() * b.content() if b else b
    if b.is_zero():
        return a.primitive_part() * a.content()
    content = _int_gcd(a.content(), b.content())
    return _primitive_gcd(a.primitive_part(), b.primitive_part()) * content


class RatFunc:
    """Element of Q(Q), kept in canonical form (see module docstring)."""

    __slots__ = ("num", "den")

    def __init__(self, num: Union[IntPoly, int] = 0, den: Union[IntPoly, int] = 1) -> None:
        if isinstance(num, int):
            num = IntPoly.constant(num)
        if isinstance(den, int):
            den = IntPoly.constant(den)
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _canonical(cls, num: IntPoly, den: IntPoly) -> "RatFunc":
        value = cls.__new__(cls)
        value.num = num
        value.den = den
        return value

    @classmethod
    def coerce(cls, value: Union["RatFunc", IntPoly, Scalar]) -> "RatFunc":
        """Lift integers, fractions and polynomials into the field."""
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, IntPoly):
            return cls._canonical(value, ONE_POLY)
        if isinstance(value, Fraction):
            return cls._canonical(
                IntPoly.constant(value.numerator), IntPoly.constant(value.denominator)
            )
        return cls._canonical(IntPoly.constant(int(value)), ONE_POLY)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __add__(self, other: Union["RatFunc", Scalar]) -> "RatFunc":
        other = RatFunc.coerce(other)
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._canonical(-self.num, self.den)

    def __sub__(self, other: Union["RatFunc", Scalar]) -> "RatFunc":
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other: Union["RatFunc", Scalar]) -> "RatFunc":
        return RatFunc.coerce(other) + (-self)

    def __mul__(self, other: Union["RatFunc", Scalar]) -> "RatFunc":
        other = RatFunc.coerce(other)
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.is_one():
            return other
        if other.is_one():
            return self
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise DivisionByZeroError("Cannot invert the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other: Union["RatFunc", Scalar]) -> "RatFunc":
        return self * RatFunc.coerce(other).inverse()

    def __rtruediv__(self, other: Union["RatFunc", Scalar]) -> "RatFunc":
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "RatFunc":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RatFunc._canonical(self.num**exponent, self.den**exponent)

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def eval_at(self, point: Scalar) -> Fraction:
        """Exact value at ``Q = point``.

        Raises:
            PoleAtPointError: If the denominator vanishes at the point
        """
        den_value = self.den.evaluate(point)
        if den_value == 0:
            raise PoleAtPointError(f"{self} has a pole at Q = {point}")
        return self.num.evaluate(point) / den_value

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, IntPoly)):
            other = RatFunc.coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs

    def __hash__(self) -> int:
        return hash((self.num.coeffs, self.den.coeffs))

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def __str__(self) -> str:
        """Render as ``Q / (Q - 1)``; the denominator is always parenthesized."""
        if self.den.is_one():
            return str(self.num)
        num_text = str(self.num)
        if self.num.term_count > 1:
            num_text = f"({num_text})"
        return f"{num_text} / ({self.den})"


def _normalize(num: IntPoly, den: IntPoly) -> Tuple[IntPoly, IntPoly]:
    if den.is_zero():
        raise DivisionByZeroError("Denominator is the zero polynomial")
    if num.is_zero():
        return ZERO_POLY, ONE_POLY
    if den.is_one():
        return num, den

    num_content = num.content()
    den_content = den.content()
    num = num.exact_quotient(num_content)
    den = den.exact_quotient(den_content)

    common = _primitive_gcd(num.primitive_part(), den.primitive_part())
    if common.degree > 0:
        num = _divide_exact(num, common)
        den = _divide_exact(den, common)

    scale = Fraction(num_content, den_content)
    num = num * scale.numerator
    den = den * scale.denominator
    if den.leading < 0:
        num, den = -num, -den
    return num, den


ZERO = RatFunc._canonical(ZERO_POLY, ONE_POLY)
ONE = RatFunc._canonical(ONE_POLY, ONE_POLY)
Q = RatFunc._canonical(Q_POLY, ONE_POLY)


def rf_add(a: RatFunc, b: RatFunc) -> RatFunc:
    """Exact sum of two rational functions."""
    return a + b


def rf_mul(a: RatFunc, b: RatFunc) -> RatFunc:
    """Exact product of two rational functions."""
    return a * b


def rf_inv(a: RatFunc) -> RatFunc:
    """Multiplicative inverse.

    Raises:
        DivisionByZeroError: If ``a`` is zero
    """
    return a.inverse()


def rf_eval_at(a: RatFunc, point: Scalar) -> Fraction:
    """Specialize ``a`` at ``Q = point``.

    Raises:
        PoleAtPointError: If ``point`` is a root of the denominator

    Examples:
        >>> rf_eval_at(rf_parse("Q / (Q - 1)"), 3)
        Fraction(3, 2)
    """
    return a.eval_at(point)


def rf_print(a: RatFunc) -> str:
    return str(a)


class _Parser:
    """Recursive-descent parser for rational expressions in Q.

    Grammar::

        expr  := term (('+' | '-') term)*
        term  := unary (('*' | '/') unary)*
        unary := ('-' | '+') unary | power
        power := atom ('^' INT)?
        atom  := INT | 'Q' | '(' expr ')'
    """

    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = self._tokenize(text)
        self.index = 0

    @staticmethod
    def _tokenize(text: str) -> List[Tuple[str, str, int]]:
        tokens = []
        pos = 0
        while pos < len(text):
            ch = text[pos]
            if ch.isspace():
                pos += 1
            elif ch.isdigit():
                start = pos
                while pos < len(text) and text[pos].isdigit():
                    pos += 1
                tokens.append(("int", text[start:pos], start))
            elif ch == "Q":
                tokens.append(("Q", ch, pos))
                pos += 1
            elif ch in "+-*/^()":
                tokens.append((ch, ch, pos))
                pos += 1
            else:
                raise ParseError(f"Unexpected character {ch!r}", pos)
        tokens.append(("end", "", len(text)))
        return tokens

    def _peek(self) -> Tuple[str, str, int]:
        return self.tokens[self.index]

    def _take(self, kind: str) -> Tuple[str, str, int]:
        token = self.tokens[self.index]
        if token[0] != kind:
            expected = "end of input" if kind == "end" else repr(kind)
            found = "end of input" if token[0] == "end" else repr(token[1])
            raise ParseError(f"Expected {expected}, found {found}", token[2])
        self.index += 1
        return token

    def parse(self) -> RatFunc:
        if self._peek()[0] == "end":
            raise ParseError("Empty expression", 0)
        value = self._expr()
        self._take("end")
        return value

    def _expr(self) -> RatFunc:
        value = self._term()
        while self._peek()[0] in ("+", "-"):
            op = self._take(self._peek()[0])[0]
            right = self._term()
            value = value + right if op == "+" else value - right
        return value

    def _term(self) -> RatFunc:
        value = self._unary()
        while self._peek()[0] in ("*", "/"):
            op = self._take(self._peek()[0])[0]
            right = self._unary()
            value = value * right if op == "*" else value / right
        return value

    def _unary(self) -> RatFunc:
        kind = self._peek()[0]
        if kind == "-":
            self._take("-")
            return -self._unary()
        if kind == "+":
            self._take("+")
            return self._unary()
        return self._power()

    def _power(self) -> RatFunc:
        base = self._atom()
        if self._peek()[0] == "^":
            self._take("^")
            exponent = self._take("int")
            return base ** int(exponent[1])
        return base

    def _atom(self) -> RatFunc:
        kind, value, pos = self._peek()
        if kind == "int":
            self._take("int")
            return RatFunc.coerce(int(value))
        if kind == "Q":
            self._take("Q")
            return Q
        if kind == "(":
            self._take("(")
            inner = self._expr()
            self._take(")")
            return inner
        found = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"Expected a number, 'Q' or '(', found {found}", pos)


def rf_parse(text: str) -> RatFunc:
    """Parse a rational expression in Q.

    Args:
        text: Expression such as ``"Q^2 - 3*Q + 4"`` or ``"(Q - 2) / (Q - 1)^2"``

    Returns:
        The canonical rational function

    Raises:
        ParseError: If the text does not follow the grammar (with the offending position)
        DivisionByZeroError: If the expression divides by zero

    Examples:
        >>> rf_parse("Q^2 - 3*Q + 4").num.coeffs
        (4, -3, 1)
    """
    return _Parser(text).parse()
