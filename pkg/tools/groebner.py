"""
Groebner Bases and Ideal Invariants
Buchberger's algorithm, initial ideals, torus saturation, monomial search,
and the invariants (Krull dimension, generator degree, saturation exponent)
consumed by the bound formulas.
"""
import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from tools.errors import (
    BudgetExceededError,
    InternalInconsistencyError,
    NonHomogeneousError,
    RingMismatchError,
    UnitIdealError,
    ZeroPolynomialError,
)
from tools.ring import (
    Monomial,
    Polynomial,
    Rational,
    Ring,
    TermOrder,
    grevlex_order,
    initial_form,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomials_of_degree,
    weight_refined_order,
)


# =============================================================================
# Groebner basis container
# =============================================================================

@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic elements sorted by leading monomial, descending."""
    elements: Tuple[Polynomial, ...]
    order: TermOrder
    leading: Tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.elements)

    @property
    def ring(self) -> Ring:
        return self.elements[0].ring

    def degree(self) -> int:
        return max(g.degree() for g in self.elements)

    def is_unit(self) -> bool:
        return any(not any(m) for m in self.leading)

    def marked(self) -> List[Tuple[Monomial, Polynomial]]:
        return list(zip(self.leading, self.elements))

    def to_strings(self) -> List[str]:
        return [g.to_string() for g in self.elements]


def _make_basis(elements: Sequence[Polynomial], order: TermOrder) -> GroebnerBasis:
    marked = sorted(
        ((g.leading_monomial(order), g) for g in elements),
        key=lambda pair: order.key(pair[0]),
        reverse=True
    )
    return GroebnerBasis(
        elements=tuple(g for _, g in marked),
        order=order,
        leading=tuple(m for m, _ in marked)
    )


# =============================================================================
# Division
# =============================================================================

def _reduce(
    f: Polynomial,
    reducers: Sequence[Tuple[Monomial, Polynomial]],
    order: TermOrder,
    quotients: Optional[List[Dict[Monomial, Fraction]]] = None
) -> Polynomial:
    """Full reduction of f by marked reducers; records cofactors into `quotients` if given."""
    keys: Dict[Monomial, Tuple[int, ...]] = {}

    def key(m: Monomial) -> Tuple[int, ...]:
        k = keys.get(m)
        if k is None:
            k = keys[m] = order.key(m)
        return k

    p = dict(f.terms)
    remainder: Dict[Monomial, Fraction] = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for index, (lead, g) in enumerate(reducers):
            if monomial_divides(lead, m):
                factor = c / g.terms[lead]
                shift = monomial_div(m, lead)
                for gm, gc in g.terms.items():
                    t = monomial_mul(gm, shift)
                    value = p.get(t, 0) - factor * gc
                    if value:
                        p[t] = value
                    else:
                        p.pop(t, None)
                if quotients is not None:
                    q = quotients[index]
                    q[shift] = q.get(shift, 0) + factor
                break
        else:
            remainder[m] = c
            del p[m]
    return Polynomial(f.ring, remainder)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Unique remainder of f modulo the reduced basis G."""
    if G.elements and f.ring != G.ring:
        raise RingMismatchError(f"ring {f.ring.variables} differs from {G.ring.variables}")
    return _reduce(f, G.marked(), G.order)


def divide(
    f: Polynomial,
    divisors: Sequence[Polynomial],
    order: TermOrder
) -> Tuple[List[Polynomial], Polynomial]:
    """Division with cofactors: f = sum(q_i * divisors_i) + remainder."""
    marked = [(g.leading_monomial(order), g) for g in divisors]
    raw: List[Dict[Monomial, Fraction]] = [{} for _ in divisors]
    remainder = _reduce(f, marked, order, quotients=raw)
    return [Polynomial(f.ring, q) for q in raw], remainder


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = monomial_lcm(lf, lg)
    return (f.mul_term(monomial_div(lcm, lf), 1 / f.terms[lf])
            - g.mul_term(monomial_div(lcm, lg), 1 / g.terms[lg]))


# =============================================================================
# Buchberger
# =============================================================================

def _update(
    leads: List[Monomial],
    pairs: Set[Tuple[int, int]],
    lead_f: Monomial,
    order: TermOrder
) -> Set[Tuple[int, int]]:
    """Gebauer-Moeller pair update when a polynomial with lead `lead_f` joins the basis."""
    new_index = len(leads)
    kept = {
        (i, j) for (i, j) in pairs
        if (not monomial_divides(lead_f, monomial_lcm(leads[i], leads[j]))
            or monomial_lcm(leads[i], leads[j]) == monomial_lcm(leads[i], lead_f)
            or monomial_lcm(leads[i], leads[j]) == monomial_lcm(leads[j], lead_f))
    }
    by_lcm: Dict[Monomial, List[int]] = {}
    for i, lead in enumerate(leads):
        by_lcm.setdefault(monomial_lcm(lead, lead_f), []).append(i)
    minimal: List[Monomial] = []
    for lcm in sorted(by_lcm, key=order.key):
        if all(not monomial_divides(other, lcm) for other in minimal):
            minimal.append(lcm)
    for lcm in minimal:
        # product criterion: coprime leads never need a pair
        if not any(lcm == monomial_mul(leads[i], lead_f) for i in by_lcm[lcm]):
            kept.add((min(by_lcm[lcm]), new_index))
    return kept


def _minimalize(marked: List[Tuple[Monomial, Polynomial]], order: TermOrder) -> List[Tuple[Monomial, Polynomial]]:
    result: List[Tuple[Monomial, Polynomial]] = []
    for lead, g in sorted(marked, key=lambda pair: order.key(pair[0])):
        if all(not monomial_divides(other, lead) for other, _ in result):
            result.append((lead, g))
    return result


def _interreduce(marked: List[Tuple[Monomial, Polynomial]], order: TermOrder) -> List[Polynomial]:
    reduced = []
    for i, (lead, g) in enumerate(marked):
        others = marked[:i] + marked[i + 1:]
        r = _reduce(g, others, order)
        reduced.append(r.scale(1 / r.terms[lead]))
    return reduced


def buchberger(polys: Sequence[Polynomial], order: TermOrder) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by `polys` (normal selection strategy)."""
    nonzero = [f for f in polys if not f.is_zero()]
    if not nonzero:
        raise ZeroPolynomialError("Groebner basis of the zero ideal")
    ring = nonzero[0].ring
    if any(f.is_monomial() and not any(next(iter(f.terms))) for f in nonzero):
        return _make_basis([ring.one()], order)

    basis: List[Tuple[Monomial, Polynomial]] = []
    leads: List[Monomial] = []
    pairs: Set[Tuple[int, int]] = set()

    def add(f: Polynomial) -> None:
        nonlocal pairs
        lead = f.leading_monomial(order)
        f = f.scale(1 / f.terms[lead])
        pairs = _update(leads, pairs, lead, order)
        basis.append((lead, f))
        leads.append(lead)

    for f in sorted(nonzero, key=lambda p: (p.degree(), p.to_string())):
        r = _reduce(f, basis, order)
        if not r.is_zero():
            add(r)

    while pairs:
        i, j = min(pairs, key=lambda p: (order.key(monomial_lcm(leads[p[0]], leads[p[1]])), p))
        pairs.remove((i, j))
        s = s_polynomial(basis[i][1], basis[j][1], order)
        r = _reduce(s, basis, order)
        if not r.is_zero():
            add(r)

    if any(not any(lead) for lead in leads):
        return _make_basis([ring.one()], order)
    return _make_basis(_interreduce(_minimalize(basis, order), order), order)


def is_reduced(G: GroebnerBasis) -> bool:
    """Monic, leads pairwise non-divisible, no term divisible by another element's lead."""
    for i, (lead, g) in enumerate(G.marked()):
        if g.terms.get(lead) != 1 or g.leading_monomial(G.order) != lead:
            return False
        for j, other in enumerate(G.leading):
            if i == j:
                continue
            if any(monomial_divides(other, m) for m in g.terms):
                return False
    return True


def satisfies_buchberger_criterion(G: GroebnerBasis) -> bool:
    """Every S-polynomial reduces to zero."""
    for f, g in itertools.combinations(G.elements, 2):
        if not normal_form(s_polynomial(f, g, G.order), G).is_zero():
            return False
    return True


# =============================================================================
# Ideals
# =============================================================================

class Ideal:
    """
    Homogeneous ideal with a synchronized cache of reduced Groebner bases.

    The cache is keyed by the canonical matrix of the term order; each key is
    computed at most once even under concurrent callers.
    """

    def __init__(self, generators: Sequence[Polynomial]):
        if not generators:
            raise ZeroPolynomialError("an ideal needs at least one generator")
        ring = generators[0].ring
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError(f"generator ring {g.ring.variables} differs from {ring.variables}")
            if g.is_zero():
                raise ZeroPolynomialError("ideal generators must be nonzero")
            if not g.is_homogeneous():
                raise NonHomogeneousError(f"generator {g} is not homogeneous")
        self.ring = ring
        self.generators: Tuple[Polynomial, ...] = tuple(generators)
        self._cache: Dict[Tuple[Tuple[int, ...], ...], GroebnerBasis] = {}
        self._locks: Dict[Tuple[Tuple[int, ...], ...], threading.Lock] = {}
        self._guard = threading.Lock()

    @classmethod
    def from_strings(cls, ring: Ring, texts: Sequence[str]) -> "Ideal":
        return cls([ring.parse(t) for t in texts])

    @property
    def n(self) -> int:
        return self.ring.n

    def basis(self, order: TermOrder) -> GroebnerBasis:
        """Reduced Groebner basis under `order`, from cache when available."""
        key = order.canonical_key()
        with self._guard:
            cached = self._cache.get(key)
            if cached is not None:
                return cached
            lock = self._locks.setdefault(key, threading.Lock())
        with lock:
            with self._guard:
                cached = self._cache.get(key)
            if cached is not None:
                return cached
            result = buchberger(self.generators, order)
            with self._guard:
                self._cache[key] = result
            return result

    def seed(self, basis: GroebnerBasis) -> None:
        """Insert a basis computed elsewhere; it must be reduced."""
        if not is_reduced(basis):
            raise InternalInconsistencyError("refusing to cache a non-reduced basis")
        with self._guard:
            self._cache.setdefault(basis.order.canonical_key(), basis)

    def grevlex_basis(self) -> GroebnerBasis:
        return self.basis(grevlex_order(self.n))

    def is_unit(self) -> bool:
        return self.grevlex_basis().is_unit()

    def degree(self) -> int:
        return max(g.degree() for g in self.generators)

    def to_strings(self) -> List[str]:
        return [g.to_string() for g in self.generators]

    def __repr__(self) -> str:
        return f"Ideal({self.to_strings()}, ring={','.join(self.ring.variables)})"


def reduced_groebner_basis(I: Ideal, order: TermOrder) -> GroebnerBasis:
    return I.basis(order)


def ideal_member(I: Ideal, f: Polynomial) -> bool:
    if f.ring != I.ring:
        raise RingMismatchError(f"ring {f.ring.variables} differs from {I.ring.variables}")
    if f.is_zero():
        return True
    return normal_form(f, I.grevlex_basis()).is_zero()


def same_ideal(I: Ideal, J: Ideal) -> bool:
    return I.grevlex_basis().elements == J.grevlex_basis().elements


def unit_ideal(ring: Ring) -> Ideal:
    return Ideal([ring.one()])


def initial_ideal(w: Sequence[Rational], I: Ideal) -> Ideal:
    """in_w(I), generated by the w-initial forms of a weight-refined reduced basis."""
    if len(set(Fraction(v) for v in w)) <= 1:
        return I
    base = grevlex_order(I.n)
    G = I.basis(weight_refined_order(w, base))
    forms = [initial_form(w, g) for g in G]
    J = Ideal(forms)
    J.seed(_make_basis(forms, base))
    return J


# =============================================================================
# Saturation and monomial search
# =============================================================================

@dataclass(frozen=True)
class SaturationResult:
    """J : (x_1...x_n)^inf with the certified and the exact saturation exponents."""
    ideal: Ideal
    alpha: int
    exact_alpha: int
    per_variable: Tuple[int, ...]

    def is_unit(self) -> bool:
        return self.ideal.is_unit()


def _variable_content(g: Polynomial, i: int) -> int:
    return min(m[i] for m in g.terms)


def _strip_variable(g: Polynomial, i: int, k: int) -> Polynomial:
    return Polynomial(g.ring, {m[:i] + (m[i] - k,) + m[i + 1:]: c for m, c in g.terms.items()})


def _variable_degree(g: Polynomial, i: int) -> int:
    return max(m[i] for m in g.terms)


def _exact_exponent(J: Ideal, saturated: Ideal, bound: int) -> int:
    n = J.n
    G = J.grevlex_basis()
    generators = saturated.grevlex_basis().elements
    for k in range(bound + 1):
        shift = (k,) * n
        if all(normal_form(s.mul_term(shift), G).is_zero() for s in generators):
            return k
    raise InternalInconsistencyError(f"saturation exponent exceeds the certified bound {bound}")


def saturate_torus(J: Ideal) -> SaturationResult:
    """
    J : (x_1...x_n)^inf by the revlex division trick.

    For each variable x_i the reduced basis under grevlex with x_i smallest is
    divided by its x_i-content, which gives J : x_i^inf; passes repeat until
    no division happens. The certified exponent is the largest x_i-degree met
    in those bases of J itself.
    """
    n = J.n
    per_variable = [0] * n
    for i in range(n):
        G = J.basis(grevlex_order(n, last=i))
        per_variable[i] = max(_variable_degree(g, i) for g in G)

    current = J
    changed = True
    while changed:
        changed = False
        for i in range(n):
            G = current.basis(grevlex_order(n, last=i))
            contents = [_variable_content(g, i) for g in G]
            if any(contents):
                current = Ideal([_strip_variable(g, i, k) for g, k in zip(G, contents)])
                changed = True

    certified = max(per_variable) if per_variable else 0
    exact = _exact_exponent(J, current, max(certified, 0) + _degree_slack(J, current))
    return SaturationResult(
        ideal=current,
        alpha=max(certified, exact),
        exact_alpha=exact,
        per_variable=tuple(per_variable)
    )


def _degree_slack(J: Ideal, saturated: Ideal) -> int:
    # search headroom past the certified bound; the joint exponent is below n * max degree
    return (J.n - 1) * max(max(_variable_degree(g, i) for g in J.generators) for i in range(J.n))


def contains_monomial(J: Ideal, degree_cap: Optional[int] = None) -> Optional[Monomial]:
    """
    A monomial of minimal total degree in J, or None when J has none.

    The search runs degree by degree (lex-descending within a degree) up to
    `degree_cap`, which defaults to alpha * n.
    """
    saturation = saturate_torus(J)
    if not saturation.is_unit():
        return None
    n = J.n
    cap = degree_cap if degree_cap is not None else saturation.alpha * n
    G = J.grevlex_basis()
    start = min(g.degree() for g in J.generators)
    for d in range(start, cap + 1):
        for m in monomials_of_degree(d, n):
            if normal_form(J.ring.monomial(m), G).is_zero():
                return m
    if degree_cap is not None:
        raise BudgetExceededError(f"no monomial of degree <= {cap}; raise the degree cap")
    raise InternalInconsistencyError(
        f"saturation is the unit ideal but no monomial of degree <= {cap} lies in the ideal"
    )


# =============================================================================
# Invariants
# =============================================================================

def krull_dimension(I: Ideal) -> int:
    """dim R/I: largest variable set containing the support of no leading monomial."""
    G = I.grevlex_basis()
    if G.is_unit():
        raise UnitIdealError("Krull dimension of the unit ideal")
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in G.leading]
    for size in range(I.n, -1, -1):
        for subset in itertools.combinations(range(I.n), size):
            chosen = frozenset(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0


def minimal_generators(I: Ideal) -> List[Polynomial]:
    """Graded-minimal generating set: drop generators lying in the ideal of earlier ones."""
    kept: List[Polynomial] = []
    for g in sorted(I.generators, key=lambda p: (p.degree(), p.to_string())):
        if kept and ideal_member(Ideal(kept), g):
            continue
        kept.append(g)
    return kept


def minimal_degree(I: Ideal) -> int:
    return max(g.degree() for g in minimal_generators(I))
