"""
Tropical Geometry
Tropical hypersurfaces and prevarieties as normal-fan skeleta, the tropical
variety as a subfan of the Groebner fan, tropical basis verification,
witness lifting, and tropical basis construction.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from tools.bounds import prop_variety_fvector_bound
from tools.cones import Cone, Fan, normal_cone, normal_fan, relint_intersection_point
from tools.errors import (
    DimensionMismatchError,
    DomainError,
    InternalInconsistencyError,
    NoWitnessError,
    NonHomogeneousError,
    NotGeneratingError,
    NotInIdealError,
    RingMismatchError,
    ZeroPolynomialError,
)
from tools.gfan import GroebnerFanResult, groebner_fan
from tools.groebner import (
    Ideal,
    _make_basis,
    contains_monomial,
    divide,
    ideal_member,
    initial_ideal,
    saturate_torus,
)
from tools.polytopes import minkowski_sum_all, newton_polytope
from tools.ring import (
    Polynomial,
    Rational,
    display_weight,
    grevlex_order,
    initial_form,
    weight_refined_order,
)


FVector = Tuple[int, ...]


@dataclass
class TropicalComplex:
    """A tropical object stored as a fan; `source` is hypersurface, prevariety or variety."""
    fan: Fan
    source: str
    refinement_f_vector: Optional[FVector] = None

    @property
    def f_vector(self) -> FVector:
        return self.fan.f_vector()

    def is_empty(self) -> bool:
        return self.fan.is_empty()

    def dim(self) -> int:
        return self.fan.dim()

    def contains(self, w: Sequence[Rational]) -> bool:
        return self.fan.locate(w) is not None

    def to_dict(self, convention: str = "min") -> Dict[str, Any]:
        cones = []
        for C in self.fan.cones:
            entry = C.to_dict()
            entry["interior"] = display_weight(C.interior, convention)
            cones.append(entry)
        result = {
            "source": self.source,
            "support_empty": self.is_empty(),
            "dim": self.dim(),
            "f_vector": list(self.f_vector),
            "maximal": list(self.fan.maximal),
            "cones": cones
        }
        if self.refinement_f_vector is not None:
            result["refinement_f_vector"] = list(self.refinement_f_vector)
        return result


def complex_f_vector(T: TropicalComplex) -> FVector:
    """Cone counts indexed by dimension 0..n."""
    return T.f_vector


def same_support(A: TropicalComplex, B: TropicalComplex) -> bool:
    """Relative-interior points of every cone of each fan lie in the other's support."""
    return (all(B.contains(C.interior) for C in A.fan.cones)
            and all(A.contains(C.interior) for C in B.fan.cones))


def _check_polys(polys: Sequence[Polynomial]) -> int:
    if not polys:
        raise DomainError("need at least one polynomial")
    ring = polys[0].ring
    for f in polys:
        if f.ring != ring:
            raise RingMismatchError(f"ring {f.ring.variables} differs from {ring.variables}")
        if f.is_zero():
            raise ZeroPolynomialError("tropicalization of the zero polynomial")
        if not f.is_homogeneous():
            raise NonHomogeneousError(f"{f} is not homogeneous")
    return ring.n


# =============================================================================
# Hypersurfaces and prevarieties
# =============================================================================

def tropical_hypersurface(f: Polynomial) -> TropicalComplex:
    """Weights where the minimum over the monomials of f is attained at least twice."""
    if f.is_zero():
        raise ZeroPolynomialError("tropical hypersurface of the zero polynomial")
    fan = normal_fan(newton_polytope(f), min_face_dim=1)
    return TropicalComplex(fan=fan, source="hypersurface", refinement_f_vector=fan.f_vector())


def in_prevariety(polys: Sequence[Polynomial], w: Sequence[Rational]) -> bool:
    return all(len(initial_form(w, f)) >= 2 for f in polys)


def tropical_prevariety(polys: Sequence[Polynomial]) -> TropicalComplex:
    """
    Intersection of the tropical hypersurfaces of `polys`.

    Stored on the normal fan of the Minkowski sum of the Newton polytopes,
    which refines every member's normal fan: a cone is kept when each member
    has at least two w-minimal terms at its relative-interior point.
    """
    n = _check_polys(polys)
    if any(f.is_monomial() for f in polys):
        return TropicalComplex(fan=Fan(ambient_dim=n, cones=[], maximal=[]), source="prevariety",
                               refinement_f_vector=(0,) * (n + 1))
    P = minkowski_sum_all([newton_polytope(f) for f in polys])
    kept: List[Cone] = []
    for d, face in P.all_faces():
        C = normal_cone(P, face, d)
        if in_prevariety(polys, C.interior):
            kept.append(C)
    fan = Fan.from_cones(n, kept)
    return TropicalComplex(fan=fan, source="prevariety", refinement_f_vector=fan.f_vector())


# =============================================================================
# Tropical variety
# =============================================================================

@dataclass
class ClassifiedFan:
    """Groebner fan with a tropical flag and saturation exponent per cone of `fan.fan.cones`."""
    fan: GroebnerFanResult
    in_tropical: List[bool]
    alphas: List[int]

    def tropical_cones(self) -> List[Cone]:
        return [C for C, t in zip(self.fan.fan.cones, self.in_tropical) if t]

    def non_tropical_cones(self) -> List[Cone]:
        return [C for C, t in zip(self.fan.fan.cones, self.in_tropical) if not t]

    def max_alpha(self) -> int:
        return max(self.alphas, default=0)

    def is_tropical_point(self, w: Sequence[Rational]) -> bool:
        for C, t in zip(self.fan.fan.cones, self.in_tropical):
            if C.contains_relint(w):
                return t
        raise InternalInconsistencyError(f"weight {[str(x) for x in w]} lies in no Groebner cone")


def _classify_cone(I: Ideal, C: Cone) -> Tuple[bool, int]:
    saturation = saturate_torus(initial_ideal(C.interior, I))
    return (not saturation.is_unit(), saturation.alpha)


def classify_groebner_fan(I: Ideal, fan: Optional[GroebnerFanResult] = None, threads: int = 1) -> ClassifiedFan:
    """Mark each Groebner cone whose relative-interior initial ideal is monomial-free."""
    fan = fan or groebner_fan(I, threads=threads)
    cones = fan.fan.cones
    if threads > 1 and len(cones) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda C: _classify_cone(I, C), cones))
    else:
        results = [_classify_cone(I, C) for C in cones]
    return ClassifiedFan(
        fan=fan,
        in_tropical=[t for t, _ in results],
        alphas=[a for _, a in results]
    )


def tropical_variety(
    I: Ideal,
    fan: Optional[GroebnerFanResult] = None,
    threads: int = 1,
    classified: Optional[ClassifiedFan] = None
) -> TropicalComplex:
    """trop(I) as the subfan of Groebner cones (all dimensions) with monomial-free initial ideals."""
    classified = classified or classify_groebner_fan(I, fan, threads)
    subfan = Fan.from_cones(I.n, classified.tropical_cones())
    return TropicalComplex(fan=subfan, source="variety")


@dataclass
class VarietyFVectorCheck:
    variety: FVector
    prevariety: FVector
    bound_by_dim: Dict[int, int]
    within_bound: bool


def variety_fvector_check(
    I: Ideal,
    fan: Optional[GroebnerFanResult] = None,
    threads: int = 1,
    classified: Optional[ClassifiedFan] = None
) -> VarietyFVectorCheck:
    """
    f-vectors of trop(I) and of the generators' prevariety, with the cell bound
    for s generators of degree <= d.

    Cells of dimension k in R^n have dimension k-1 modulo the all-ones line,
    so f_k is compared with prop_variety_fvector_bound(s, d, n, k - 1).
    """
    variety = complex_f_vector(tropical_variety(I, fan, threads, classified))
    prevariety = complex_f_vector(tropical_prevariety(list(I.generators)))
    s, d, n = len(I.generators), I.degree(), I.n
    bound_by_dim = {k: prop_variety_fvector_bound(s, d, n, k - 1) for k in range(1, n + 1)}
    return VarietyFVectorCheck(
        variety=variety,
        prevariety=prevariety,
        bound_by_dim=bound_by_dim,
        within_bound=all(variety[k] <= bound for k, bound in bound_by_dim.items())
    )


# =============================================================================
# Tropical bases
# =============================================================================

@dataclass
class TropicalBasisCheck:
    result: bool
    certificate: Optional[Tuple[Fraction, ...]] = None

    def to_dict(self, convention: str = "min") -> Dict[str, Any]:
        return {
            "is_tropical_basis": self.result,
            "certificate": display_weight(self.certificate, convention) if self.certificate else None
        }


def check_generates(I: Ideal, T: Sequence[Polynomial]) -> None:
    """Raise unless every member of T lies in I and T generates I."""
    for t in T:
        if t.ring != I.ring:
            raise RingMismatchError(f"ring {t.ring.variables} differs from {I.ring.variables}")
        if not ideal_member(I, t):
            raise NotInIdealError(f"{t} is not in the ideal")
    span = Ideal(list(T))
    for g in I.generators:
        if not ideal_member(span, g):
            raise NotGeneratingError(f"generator {g} is not in the ideal of the candidate set")


def is_tropical_basis(
    I: Ideal,
    T: Sequence[Polynomial],
    classified: Optional[ClassifiedFan] = None,
    threads: int = 1
) -> TropicalBasisCheck:
    """
    Whether the tropical prevariety of T equals trop(I).

    T lies in I, so trop(I) is always inside the prevariety; the check looks
    for a prevariety point in the relative interior of a non-tropical
    Groebner cone and returns it as the certificate.
    """
    check_generates(I, T)
    prevariety = tropical_prevariety(T)
    if prevariety.is_empty():
        return TropicalBasisCheck(result=True)

    classified = classified or classify_groebner_fan(I, threads=threads)
    if not any(classified.in_tropical):
        return TropicalBasisCheck(result=False, certificate=prevariety.fan.cones[0].interior)

    for C in prevariety.fan.cones:
        if not classified.is_tropical_point(C.interior):
            return TropicalBasisCheck(result=False, certificate=C.interior)

    for P in prevariety.fan.cones:
        for G in classified.non_tropical_cones():
            point = relint_intersection_point(P, G)
            if point is not None:
                return TropicalBasisCheck(result=False, certificate=point)
    return TropicalBasisCheck(result=True)


def find_witness(I: Ideal, w: Sequence[Rational], degree_cap: Optional[int] = None) -> Polynomial:
    """
    f in I whose w-initial form is a monomial of minimal degree.

    The monomial is found in in_w(I); dividing it by the w-initial forms of a
    weight-refined reduced basis records cofactors, and applying the
    cofactors to the basis elements themselves lifts it to I.
    """
    if len(w) != I.n:
        raise DimensionMismatchError(f"weight of length {len(w)} for {I.n} variables")
    base = grevlex_order(I.n)
    G = I.basis(weight_refined_order(w, base))
    forms = [initial_form(w, g) for g in G]
    J = Ideal(forms)
    J.seed(_make_basis(forms, base))

    m = contains_monomial(J, degree_cap)
    if m is None:
        raise NoWitnessError(f"in_w(I) contains no monomial at w={[str(x) for x in w]}: w lies in trop(I)")

    quotients, remainder = divide(I.ring.monomial(m), forms, base)
    if not remainder.is_zero():
        raise InternalInconsistencyError("monomial of the initial ideal did not reduce to zero")
    witness = I.ring.zero()
    for q, g in zip(quotients, G):
        witness = witness + q * g

    if not initial_form(w, witness).is_monomial() or not ideal_member(I, witness):
        raise InternalInconsistencyError("lifted witness failed validation")
    return witness.normalized()


@dataclass
class TropicalBasisResult:
    basis: List[Polynomial]
    degree: int
    universal_degree: int
    witnesses: List[Polynomial]
    alpha: int
    rounds: int
    bound_chain: Dict[str, Any] = field(default_factory=dict)
    variety: Optional[TropicalComplex] = None
    trace_id: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "basis": [f.to_string() for f in self.basis],
            "degree": self.degree,
            "universal_degree": self.universal_degree,
            "witnesses": [f.to_string() for f in self.witnesses],
            "alpha": self.alpha,
            "rounds": self.rounds,
            "bound_chain": {k: (str(v) if v is not None else None) for k, v in self.bound_chain.items()}
        }


def compute_tropical_basis(
    I: Ideal,
    threads: int = 1,
    trace_id: Optional[str] = None,
    budget: Optional[int] = None
) -> TropicalBasisResult:
    """Universal Groebner basis plus witnesses, grown until it is a tropical basis."""
    from graphs.base_graph import run_tropical_basis

    state = run_tropical_basis(I, threads=threads, trace_id=trace_id, budget=budget)
    report = state["report"]
    return TropicalBasisResult(
        basis=list(state["basis"]),
        degree=report["degree"],
        universal_degree=report["universal_degree"],
        witnesses=list(state.get("witnesses") or []),
        alpha=report["alpha"],
        rounds=state.get("round", 0),
        bound_chain=report["bound_chain"],
        variety=tropical_variety(I, classified=state["classification"]),
        trace_id=state.get("trace_id")
    )
