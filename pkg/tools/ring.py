"""
Exact Polynomial Arithmetic
Sparse homogeneous polynomials over the rationals, matrix term orders,
weight vectors and initial forms.

Conventions:
- Initial forms use the MIN convention: in_w(f) keeps the terms of minimal
  w-weight.
- Term orders select MAXIMAL elements (the leading term is the largest
  monomial under the order's row keys).
- The two meet in weight_refined_order(), which stores the weight row with
  the sign flipped (WEIGHT_ROW_SIGN). This is the only place the sign is set.
"""
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from tools.errors import (
    DimensionMismatchError,
    PolynomialSyntaxError,
    RingMismatchError,
    UnknownVariableError,
    ZeroPolynomialError,
)


Monomial = Tuple[int, ...]
WeightVector = Tuple[Fraction, ...]
Rational = Union[int, Fraction]

# Sign applied to a weight vector when it becomes the first row of a term order.
WEIGHT_ROW_SIGN = -1


# =============================================================================
# Monomials
# =============================================================================

def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a divides b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def monomials_of_degree(degree: int, n: int) -> List[Monomial]:
    """All exponent vectors of length n and total degree `degree`, lex-descending."""
    if n == 1:
        return [(degree,)]
    result = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(degree - first, n - 1):
            result.append((first,) + rest)
    return result


# =============================================================================
# Weight vectors
# =============================================================================

def as_weight(entries: Iterable[Rational], n: Optional[int] = None) -> WeightVector:
    """Coerce to an exact weight vector, checking the length when n is given."""
    w = tuple(Fraction(e) for e in entries)
    if n is not None and len(w) != n:
        raise DimensionMismatchError(f"weight vector has length {len(w)}, expected {n}")
    return w


def parse_weight(text: str, n: Optional[int] = None) -> WeightVector:
    """Parse '1,0,-1/2' style weight text."""
    try:
        entries = [Fraction(part.strip()) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError) as e:
        raise DimensionMismatchError(f"invalid weight vector {text!r}: {e}")
    return as_weight(entries, n)


def primitive_int(vector: Sequence[Rational]) -> Tuple[int, ...]:
    """Positive rescaling of a rational vector to a primitive integer vector."""
    fractions = [Fraction(v) for v in vector]
    denominator = 1
    for v in fractions:
        denominator = denominator * v.denominator // gcd(denominator, v.denominator)
    ints = [int(v * denominator) for v in fractions]
    divisor = 0
    for v in ints:
        divisor = gcd(divisor, abs(v))
    if divisor == 0:
        return tuple(ints)
    return tuple(v // divisor for v in ints)


def weight_of(w: Sequence[Rational], m: Monomial) -> Fraction:
    return sum((Fraction(wi) * mi for wi, mi in zip(w, m)), Fraction(0))


def display_weight(w: Sequence[Rational], convention: str = "min") -> List[str]:
    """Weights as strings in the requested display convention."""
    sign = -1 if convention == "max" else 1
    return [str(Fraction(v) * sign) for v in w]


# =============================================================================
# Term orders
# =============================================================================

class Ordering(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


@dataclass(frozen=True)
class TermOrder:
    """Matrix term order: monomials compare by the tuple of row dot products."""
    rows: Tuple[Tuple[int, ...], ...]
    kind: str

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def key(self, m: Monomial) -> Tuple[int, ...]:
        return tuple(sum(r * e for r, e in zip(row, m)) for row in self.rows)

    def leading_monomial(self, monomials: Iterable[Monomial]) -> Monomial:
        return max(monomials, key=self.key)

    def canonical_key(self) -> Tuple[Tuple[int, ...], ...]:
        """Cache key: the matrix with zero rows dropped."""
        return tuple(row for row in self.rows if any(row))


def lex_order(n: int) -> TermOrder:
    """Lexicographic order with x_1 > x_2 > ... > x_n."""
    rows = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
    return TermOrder(rows, "lex")


def grevlex_order(n: int, last: Optional[int] = None) -> TermOrder:
    """
    Graded reverse lexicographic order with x_1 > ... > x_n.

    When `last` is given, that variable is made the smallest one (the other
    variables keep their relative order); this is the revlex order used for
    per-variable saturation.
    """
    variables = list(range(n))
    if last is not None:
        variables.remove(last)
        variables.append(last)
    rows = [tuple([1] * n)]
    for var in reversed(variables[1:]):
        rows.append(tuple(-1 if j == var else 0 for j in range(n)))
    return TermOrder(tuple(rows), "grevlex")


def weight_refined_order(w: Sequence[Rational], base: TermOrder) -> TermOrder:
    """
    Order whose leading terms are the base-leading terms of in_w(f).

    The weight row is stored as WEIGHT_ROW_SIGN * primitive(w), so that
    maximizing it minimizes the w-weight. A zero weight yields the base order.
    """
    if len(w) != base.n:
        raise DimensionMismatchError(f"weight of length {len(w)} for an order on {base.n} variables")
    row = primitive_int(w)
    if not any(row):
        return base
    first = tuple(WEIGHT_ROW_SIGN * v for v in row)
    return TermOrder((first,) + base.rows, "weighted-refined")


def compare_monomials(order: TermOrder, a: Monomial, b: Monomial) -> Ordering:
    if len(a) != order.n or len(b) != order.n:
        raise DimensionMismatchError("monomial length does not match the order")
    ka, kb = order.key(a), order.key(b)
    if ka < kb:
        return Ordering.LESS
    if ka > kb:
        return Ordering.GREATER
    return Ordering.EQUAL


# =============================================================================
# Rings and polynomials
# =============================================================================

@dataclass(frozen=True)
class Ring:
    """Ordered variable list of Q[x_1, ..., x_n]."""
    variables: Tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.variables)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.n: Fraction(1)})

    def monomial(self, exponents: Sequence[int], coefficient: Rational = 1) -> "Polynomial":
        if len(exponents) != self.n:
            raise DimensionMismatchError(f"monomial of length {len(exponents)} in a ring with {self.n} variables")
        return Polynomial(self, {tuple(exponents): Fraction(coefficient)})

    def variable(self, name: str) -> "Polynomial":
        if name not in self.variables:
            raise UnknownVariableError(f"unknown variable {name!r}")
        index = self.variables.index(name)
        return self.monomial(tuple(1 if j == index else 0 for j in range(self.n)))

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def format_monomial(self, m: Monomial) -> str:
        factors = []
        for name, e in zip(self.variables, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) if factors else "1"


def make_ring(variables: Union[str, Sequence[str]]) -> Ring:
    if isinstance(variables, str):
        variables = [v.strip() for v in variables.split(",") if v.strip()]
    names = tuple(variables)
    if not names:
        raise DimensionMismatchError("a ring needs at least one variable")
    if len(set(names)) != len(names):
        raise DimensionMismatchError(f"duplicate variable names in {names}")
    for name in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
            raise UnknownVariableError(f"invalid variable name {name!r}")
    return Ring(names)


def _canonical_sort_key(m: Monomial) -> Tuple[int, Monomial]:
    return (sum(m), m)


class Polynomial:
    """
    Sparse polynomial with exact rational coefficients.

    Immutable by convention: every arithmetic operation returns a new object
    and zero coefficients are never stored.
    """
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Dict[Monomial, Fraction]):
        self.ring = ring
        self.terms = {m: Fraction(c) for m, c in terms.items() if c != 0}
        self._hash: Optional[int] = None

    # ---- structure --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __len__(self) -> int:
        return len(self.terms)

    def monomials(self) -> List[Monomial]:
        return sorted(self.terms, key=_canonical_sort_key, reverse=True)

    def degree(self) -> int:
        if self.is_zero():
            raise ZeroPolynomialError("degree of the zero polynomial")
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def leading_monomial(self, order: TermOrder) -> Monomial:
        if self.is_zero():
            raise ZeroPolynomialError("leading monomial of the zero polynomial")
        return order.leading_monomial(self.terms)

    def leading_coefficient(self, order: TermOrder) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    # ---- arithmetic -------------------------------------------------------

    def _check_ring(self, other: "Polynomial") -> None:
        if other.ring != self.ring:
            raise RingMismatchError(f"ring {other.ring.variables} differs from {self.ring.variables}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        result = dict(self.terms)
        for m, c in other.terms.items():
            result[m] = result.get(m, 0) + c
        return Polynomial(self.ring, result)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        result = dict(self.terms)
        for m, c in other.terms.items():
            result[m] = result.get(m, 0) - c
        return Polynomial(self.ring, result)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other: Union["Polynomial", Rational]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check_ring(other)
        result: Dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = monomial_mul(ma, mb)
                result[m] = result.get(m, 0) + ca * cb
        return Polynomial(self.ring, result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        result = self.ring.one()
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, c: Rational) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, m: Monomial, c: Rational = 1) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self.ring, {monomial_mul(k, m): v * c for k, v in self.terms.items()})

    def monic(self, order: TermOrder) -> "Polynomial":
        """Divide by the leading coefficient under `order`."""
        return self.scale(1 / self.leading_coefficient(order))

    def normalized(self) -> "Polynomial":
        """Order-independent scalar normalization: first canonical term gets coefficient 1."""
        if self.is_zero():
            return self
        return self.scale(1 / self.terms[self.monomials()[0]])

    def clear_denominators(self) -> "Polynomial":
        """Primitive integer multiple with positive first canonical coefficient."""
        if self.is_zero():
            return self
        first = self.normalized()
        denominator = 1
        for c in first.terms.values():
            denominator = denominator * c.denominator // gcd(denominator, c.denominator)
        scaled = first.scale(denominator)
        divisor = 0
        for c in scaled.terms.values():
            divisor = gcd(divisor, abs(int(c)))
        return scaled.scale(Fraction(1, divisor))

    # ---- comparison / output ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def to_string(self) -> str:
        """Canonical serialization: terms by (degree, exponents) descending."""
        if self.is_zero():
            return "0"
        parts: List[str] = []
        for i, m in enumerate(self.monomials()):
            c = self.terms[m]
            negative = c < 0
            magnitude = -c if negative else c
            body = self.ring.format_monomial(m)
            if body == "1":
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}*{body}"
            if i == 0:
                parts.append(f"-{text}" if negative else text)
            else:
                parts.append(f" - {text}" if negative else f" + {text}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_string()!r}, ring={','.join(self.ring.variables)})"


def initial_form(w: Sequence[Rational], f: Polynomial) -> Polynomial:
    """Terms of f of minimal w-weight."""
    if f.is_zero():
        raise ZeroPolynomialError("initial form of the zero polynomial")
    if len(w) != f.ring.n:
        raise DimensionMismatchError(f"weight of length {len(w)} for a ring with {f.ring.n} variables")
    weights = {m: weight_of(w, m) for m in f.terms}
    minimum = min(weights.values())
    return Polynomial(f.ring, {m: c for m, c in f.terms.items() if weights[m] == minimum})


# =============================================================================
# Parser
# =============================================================================

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INTEGER = re.compile(r"[0-9]+")


class _PolynomialParser:
    """Recursive-descent parser for the polynomial grammar."""

    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.pos = 0

    def error(self, message: str) -> PolynomialSyntaxError:
        return PolynomialSyntaxError(message, self.pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> Polynomial:
        if not self.peek():
            raise self.error("empty polynomial")
        terms: Dict[Monomial, Fraction] = {}
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            coefficient, m = self.term()
            terms[m] = terms.get(m, 0) + sign * coefficient
            token = self.peek()
            if not token:
                break
            if token not in "+-":
                raise self.error(f"expected '+' or '-', found {token!r}")
            sign = -1 if token == "-" else 1
            self.pos += 1
        return Polynomial(self.ring, terms)

    def term(self) -> Tuple[Fraction, Monomial]:
        coefficient = Fraction(1)
        exponents = [0] * self.ring.n
        token = self.peek()
        if token.isdigit():
            coefficient = self.rational()
            if self.peek() != "*":
                return coefficient, tuple(exponents)
            self.pos += 1
        while True:
            index, power = self.factor()
            exponents[index] += power
            if self.peek() != "*":
                break
            self.pos += 1
        return coefficient, tuple(exponents)

    def factor(self) -> Tuple[int, int]:
        self.skip()
        match = _IDENTIFIER.match(self.text, self.pos)
        if not match:
            found = self.peek() or "end of input"
            raise self.error(f"expected a variable, found {found!r}")
        name = match.group()
        if name not in self.ring.variables:
            raise UnknownVariableError(f"unknown variable {name!r} at column {self.pos + 1}")
        self.pos = match.end()
        power = 1
        if self.peek() == "^":
            self.pos += 1
            power = self.natural()
        return self.ring.variables.index(name), power

    def natural(self) -> int:
        self.skip()
        match = _INTEGER.match(self.text, self.pos)
        if not match:
            raise self.error("expected a natural number")
        self.pos = match.end()
        return int(match.group())

    def rational(self) -> Fraction:
        numerator = self.natural()
        if self.peek() == "/":
            self.pos += 1
            denominator = self.natural()
            if denominator == 0:
                raise self.error("zero denominator")
            return Fraction(numerator, denominator)
        return Fraction(numerator)


def parse_polynomial(text: str, variables: Union[Ring, Sequence[str], str]) -> Polynomial:
    """
    Parse a polynomial.

    Grammar: term = [rational "*"] factor ("*" factor)* | rational;
    factor = var ["^" nat]; rational = int ["/" posint];
    polynomial = ["+"|"-"] term (("+"|"-") term)*.
    The result may be the zero polynomial (e.g. "x - x"); callers that need a
    nonzero polynomial check is_zero() and raise ZeroPolynomialError.
    """
    ring = variables if isinstance(variables, Ring) else make_ring(variables)
    return _PolynomialParser(text, ring).parse()


def parse_nonzero(text: str, variables: Union[Ring, Sequence[str], str]) -> Polynomial:
    f = parse_polynomial(text, variables)
    if f.is_zero():
        raise ZeroPolynomialError(f"{text!r} is the zero polynomial")
    return f
