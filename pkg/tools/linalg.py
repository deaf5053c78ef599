"""
Exact Linear Algebra
sympy.Matrix row reduction, kernels and determinants, returned as Fractions
or primitive integer vectors for the hull and cone code.
"""
from fractions import Fraction
from typing import List, Sequence, Tuple

import sympy

from tools.ring import Rational, primitive_int


Vector = Tuple[int, ...]


def dot(a: Sequence[Rational], b: Sequence[Rational]):
    return sum(x * y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def add(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def _entry(x: Rational) -> sympy.Rational:
    if isinstance(x, Fraction):
        return sympy.Rational(x.numerator, x.denominator)
    return sympy.Integer(x)


def _fraction(x: sympy.Rational) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def to_matrix(rows: Sequence[Sequence[Rational]], ncols: int) -> sympy.Matrix:
    if not rows:
        return sympy.zeros(0, ncols)
    return sympy.Matrix([[_entry(x) for x in r] for r in rows])


def integer_det(rows: Sequence[Sequence[int]]) -> int:
    if not rows:
        return 1
    return int(to_matrix(rows, len(rows)).det())


def rref(rows: Sequence[Sequence[Rational]], ncols: int) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    if not rows:
        return [], []
    reduced, pivots = to_matrix(rows, ncols).rref()
    return [[_fraction(x) for x in reduced.row(i)] for i in range(len(pivots))], list(pivots)


def rank(rows: Sequence[Sequence[Rational]], ncols: int) -> int:
    return to_matrix(rows, ncols).rank() if rows else 0


def row_basis(rows: Sequence[Sequence[Rational]], ncols: int) -> List[Vector]:
    """Canonical basis of the row space: primitive integer rows of the rref."""
    reduced, _ = rref(rows, ncols)
    return [primitive_int(r) for r in reduced]


def nullspace(rows: Sequence[Sequence[Rational]], ncols: int) -> List[Vector]:
    """Integer basis of {x : rows . x = 0}, one vector per free column."""
    if not rows:
        return [tuple(1 if j == i else 0 for j in range(ncols)) for i in range(ncols)]
    return [primitive_int([_fraction(x) for x in v]) for v in to_matrix(rows, ncols).nullspace()]


def normal_of(differences: Sequence[Sequence[int]], dimension: int) -> Vector:
    """Primitive integer vector orthogonal to k-1 difference vectors in Z^k (zero if dependent)."""
    kernel = nullspace(differences, dimension)
    return kernel[0] if len(kernel) == 1 else (0,) * dimension


def project_away(v: Sequence[Rational], spanning: Sequence[Sequence[int]]) -> Tuple[Fraction, ...]:
    """Orthogonal projection of v onto the complement of span(spanning)."""
    basis = row_basis(spanning, len(v)) if spanning else []
    if not basis:
        return tuple(Fraction(x) for x in v)
    B = to_matrix(basis, len(v))
    x = to_matrix([v], len(v)).T
    coefficients = (B * B.T).LUsolve(B * x)
    return tuple(_fraction(e) for e in x - B.T * coefficients)
