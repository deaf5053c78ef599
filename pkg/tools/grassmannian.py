"""
Pluecker Ideals
Quadratic relations among the D x D minors of a generic D x N matrix, in the
ring with one variable p_S per D-subset S of {1, ..., N}.
"""
from itertools import combinations
from typing import Dict, List, Tuple

from tools.errors import ParameterError
from tools.groebner import Ideal
from tools.ring import Polynomial, Ring, make_ring


Subset = Tuple[int, ...]


def _check(D: int, N: int) -> None:
    if not 2 <= D <= N - 2:
        raise ParameterError(f"Pluecker relations need 2 <= D <= N-2, got D={D}, N={N}")


def pluecker_variable(S: Subset, N: int) -> str:
    """p12 for {1, 2} when N <= 9, p1_12 style otherwise."""
    if N <= 9:
        return "p" + "".join(str(i) for i in S)
    return "p" + "_".join(str(i) for i in S)


def pluecker_ring(D: int, N: int) -> Tuple[Ring, Dict[Subset, int]]:
    """Ring over the D-subsets of {1..N} in lexicographic order, with the subset index."""
    subsets = list(combinations(range(1, N + 1), D))
    ring = make_ring([pluecker_variable(S, N) for S in subsets])
    return ring, {S: i for i, S in enumerate(subsets)}


def _relation(ring: Ring, index: Dict[Subset, int], I: Subset, J: Subset) -> Polynomial:
    """sum over l of (-1)^l p_{I + j_l} p_{J - j_l}, with p_{I + j} re-sorted."""
    total = ring.zero()
    for l, j in enumerate(J):
        if j in I:
            continue
        sign = (-1) ** (l + sum(1 for i in I if i > j))
        exponents = [0] * ring.n
        exponents[index[tuple(sorted(I + (j,)))]] += 1
        exponents[index[J[:l] + J[l + 1:]]] += 1
        total = total + ring.monomial(exponents, sign)
    return total


def pluecker_relations(D: int, N: int) -> List[Polynomial]:
    """All nonzero quadratic Pluecker relations, normalized and without repeats."""
    _check(D, N)
    ring, index = pluecker_ring(D, N)
    found: Dict[Tuple, Polynomial] = {}
    for I in combinations(range(1, N + 1), D - 1):
        for J in combinations(range(1, N + 1), D + 1):
            f = _relation(ring, index, I, J)
            if not f.is_zero():
                g = f.normalized()
                found.setdefault(tuple(sorted(g.terms.items())), g)
    return list(found.values())


def three_term_relations(D: int, N: int) -> List[Polynomial]:
    """
    Relations with I = S + {a} and J = S + {b, c, d} for a < b < c < d outside S.

    For D = 2 these are a tropical basis of the Pluecker ideal.
    """
    _check(D, N)
    ring, index = pluecker_ring(D, N)
    relations = []
    for S in combinations(range(1, N + 1), D - 2):
        rest = [i for i in range(1, N + 1) if i not in S]
        for a, b, c, d in combinations(rest, 4):
            I = tuple(sorted(S + (a,)))
            J = tuple(sorted(S + (b, c, d)))
            relations.append(_relation(ring, index, I, J).normalized())
    return relations


def pluecker_ideal(D: int, N: int, three_term: bool = False) -> Ideal:
    """I_{D,N}, generated by every quadratic relation or only the three-term ones."""
    return Ideal(three_term_relations(D, N) if three_term else pluecker_relations(D, N))
