"""
Degree and f-Vector Bounds
Closed-form calculators over exact integers and rationals, plus the
constant-coefficient f-vector bound read off lambda_j(d, n).
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Tuple, Union

from tools.errors import ParameterError
from tools.polytopes import lambda_enumerate


Exact = Union[int, Fraction]


def _exact(value: Fraction) -> Exact:
    return value.numerator if value.denominator == 1 else value


def _binom(a: int, k: int) -> int:
    """C(a, k) with C(a, 0) = 1 for every a and 0 outside the usual range."""
    if k == 0:
        return 1
    if a < 0 or k < 0 or k > a:
        return 0
    return comb(a, k)


def _check_rank(d: int, n: int, r: int) -> None:
    if r < 1:
        raise ParameterError(f"dimension r={r}: the formula requires r >= 1")
    if r >= n:
        raise ParameterError(f"dimension r={r} must be smaller than n={n}")
    if d < 1:
        raise ParameterError(f"degree d={d} must be positive")


def _mayr_ritscher_base(d: int, n: int, r: int) -> Fraction:
    return Fraction(d ** (n - r) + d, 2) ** (2 ** (r - 1))


@dataclass
class BoundReport:
    """Named inputs, named values and an inequality chain (label, value)."""
    name: str
    inputs: Dict[str, int]
    values: Dict[str, Exact] = field(default_factory=dict)
    chain: List[Tuple[str, Exact]] = field(default_factory=list)
    consistent: bool = True

    def last(self) -> Exact:
        return self.chain[-1][1]

    def chain_values(self) -> List[Exact]:
        return [v for _, v in self.chain]

    def is_monotone(self) -> bool:
        values = self.chain_values()
        return all(a <= b for a, b in zip(values, values[1:]))

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "inputs": dict(self.inputs),
            "values": {k: str(v) for k, v in self.values.items()},
            "chain": [{"label": label, "value": str(value)} for label, value in self.chain],
            "consistent": self.consistent
        }


def eq2_mayr_ritscher(d: int, n: int, r: int) -> Exact:
    """Degree bound 2 * ((d^(n-r) + d) / 2)^(2^(r-1)) for reduced Groebner bases."""
    _check_rank(d, n, r)
    return _exact(2 * _mayr_ritscher_base(d, n, r))


def eq3_tropical_basis_bound(deg_u: int, alpha: int, n: int, d: int, r: int) -> BoundReport:
    """
    Chain max(deg_u, alpha*n) <= n*deg_u <= 2n * ((d^(n-r) + d) / 2)^(2^(r-1)).

    Inputs with deg_u above the Groebner degree bound are flagged, not rejected.
    alpha may exceed deg_u; the first link takes the maximum.
    """
    _check_rank(d, n, r)
    if deg_u < 1 or alpha < 0:
        raise ParameterError(f"need deg_u >= 1 and alpha >= 0, got deg_u={deg_u}, alpha={alpha}")
    gb_degree = eq2_mayr_ritscher(d, n, r)
    top = _exact(2 * n * _mayr_ritscher_base(d, n, r))
    report = BoundReport(
        name="eq3",
        inputs={"deg_u": deg_u, "alpha": alpha, "n": n, "d": d, "r": r},
        values={"eq2": gb_degree, "eq3": top},
        chain=[
            ("max_degU_alpha_n", max(deg_u, alpha * n)),
            ("n_degU", n * deg_u),
            ("eq3", top)
        ],
        consistent=deg_u <= gb_degree
    )
    return report


def gb_cardinality_bound(e: int, n: int) -> int:
    """Monomials of degree e in n variables: bounds the size of a reduced basis of degree e."""
    if e < 0 or n < 1:
        raise ParameterError(f"need e >= 0 and n >= 1, got e={e}, n={n}")
    return comb(e + n - 1, n - 1)


def _check_fvector_args(d: int, n: int, j: int) -> None:
    if d < 1 or n < 2 or not 0 <= j <= n - 1:
        raise ParameterError(f"need d >= 1, n >= 2, 0 <= j <= n-1, got d={d}, n={n}, j={j}")


def eq4_unimodular_fvector(d: int, n: int, j: int) -> int:
    """Number of j-simplices in a unimodular triangulation of d * Delta_{n-1}."""
    _check_fvector_args(d, n, j)
    return sum(
        (-1) ** (i + j) * comb(j, i) * comb(d * i + d + n - 1, n - 1)
        for i in range(j + 1)
    )


def eq5_hypersurface_bound(d: int, n: int, j: int) -> int:
    """Upper bound on the j-dimensional cells of a tropical hypersurface of degree d in n variables."""
    _check_fvector_args(d, n, j)
    return sum(
        (-1) ** (n + i - j) * _binom(n - j - 1, i - 1) * comb(d * i + n - 1, n - 1)
        for i in range(1, n - j + 1)
    )


def prop_variety_fvector_bound(s: int, d: int, n: int, j: int) -> int:
    """Cells of a tropical variety cut out by s polynomials of degree <= d."""
    if s < 1:
        raise ParameterError(f"need s >= 1, got s={s}")
    return eq5_hypersurface_bound(s * d, n, j)


def lambda0_vertex_bound(sd: int, n: int) -> int:
    if sd < 1 or n < 3:
        raise ParameterError(f"need sd >= 1 and n >= 3, got sd={sd}, n={n}")
    first = sum(2 * _binom(i + n - 3, i) for i in range(sd - 1))
    second = sum((n - i) * _binom(i + sd - 2, i) for i in range(n - 2))
    return first + second


def constant_coefficient_fvector_bound(s: int, d: int, n: int, j: int, budget: Optional[int] = None) -> BoundReport:
    """
    f_j(trop I) <= lambda_{n-j-1}(sd, n) for a constant-coefficient tropical basis
    of s polynomials of degree <= d.

    j counts cell dimensions modulo the all-ones line, 1 <= j <= n-1. The
    value is a bound only when the enumeration finished; a budgeted run gives
    a lower bound on lambda and the report is marked inconsistent. For
    j = n-1 the closed-form vertex bound is appended to the chain.
    """
    if s < 1 or d < 1 or n < 2 or not 1 <= j <= n - 1:
        raise ParameterError(f"need s, d >= 1, n >= 2, 1 <= j <= n-1, got s={s}, d={d}, n={n}, j={j}")
    result = lambda_enumerate(s * d, n, budget)
    value = result.values[n - j - 1]
    chain = [(f"lambda_{n - j - 1}", value)]
    if j == n - 1 and n >= 3:
        chain.append(("lambda0_vertex_bound", lambda0_vertex_bound(s * d, n)))
    return BoundReport(
        name="constant",
        inputs={"s": s, "d": d, "n": n, "j": j},
        values={"lambda": value, "nodes": result.nodes},
        chain=chain,
        consistent=result.exact
    )


def pluecker_degree_bound(D: int, N: int) -> BoundReport:
    """Degree bound for a tropical basis of the Pluecker ideal of D-planes in N-space."""
    if not 2 <= D < N:
        raise ParameterError(f"need 2 <= D < N, got D={D}, N={N}")
    n = comb(N, D)
    r = (N - D) * D + 1
    if n <= r:
        raise ParameterError(f"C(N,D)={n} must exceed (N-D)D+1={r}")
    value = 2 * n * (2 ** (n - N * D + D * D - 2) + 1) ** (2 ** (N * D - D * D))
    return BoundReport(
        name="pluecker",
        inputs={"D": D, "N": N},
        values={"n": n, "r": r, "degree": value},
        chain=[("degree", value)]
    )
