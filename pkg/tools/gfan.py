"""
Groebner Fan
Groebner cones of marked reduced bases, facet flips, the breadth-first fan
traversal, and universal Groebner bases.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from tools.cones import Cone, ConeFaces, ConeKey, Fan, full_cone_faces
from tools.errors import BudgetExceededError, NotAFacetError, NotInIdealError
from tools.groebner import GroebnerBasis, Ideal, buchberger, ideal_member, normal_form
from tools.linalg import Vector, dot
from tools.ring import (
    Polynomial,
    TermOrder,
    grevlex_order,
    initial_form,
    monomial_divides,
    primitive_int,
    weight_refined_order,
)


def order_interior_point(order: TermOrder, normals: Sequence[Vector]) -> Vector:
    """Integer weight strictly inside {w : a . w > 0 for all a} for normals a = trail - lead."""
    epsilon = Fraction(1, 2)
    for a in normals:
        coefficients = [dot(row, a) for row in order.rows]
        j = next(i for i, c in enumerate(coefficients) if c != 0)
        tail = sum(abs(c) for c in coefficients[j + 1:])
        epsilon = min(epsilon, Fraction(abs(coefficients[j]), 1 + tail))
    point = [Fraction(0)] * order.n
    for i, row in enumerate(order.rows):
        factor = epsilon ** i
        point = [p - factor * r for p, r in zip(point, row)]
    return primitive_int(point)


def cone_normals(G: GroebnerBasis) -> List[Vector]:
    normals = set()
    for lead, g in G.marked():
        for m in g.terms:
            if m != lead:
                normals.add(primitive_int(tuple(t - l for t, l in zip(m, lead))))
    return sorted(normals)


def groebner_cone_faces(G: GroebnerBasis) -> ConeFaces:
    normals = cone_normals(G)
    interior = order_interior_point(G.order, normals) if normals else (0,) * G.order.n
    return full_cone_faces(G.order.n, normals, interior)


def groebner_cone(I: Ideal, G: GroebnerBasis) -> Cone:
    """Closed cone of weights whose initial forms keep the marked leading terms of G."""
    return groebner_cone_faces(G).cone


def flip_facet(I: Ideal, G: GroebnerBasis, facet_normal: Sequence[int], faces: Optional[ConeFaces] = None) -> GroebnerBasis:
    """Reduced Groebner basis of the maximal cone across the given facet."""
    faces = faces or groebner_cone_faces(G)
    a = primitive_int(facet_normal)
    if a not in faces.facet_points:
        raise NotAFacetError(f"{list(facet_normal)} is not a facet normal of the Groebner cone")
    w = faces.facet_points[a]

    forms = [initial_form(w, g) for g in G]
    base = TermOrder((a,) + grevlex_order(I.n).rows, "flip")
    new_order = weight_refined_order(w, base)
    H = buchberger(forms, new_order)
    lifts = [h - normal_form(h, G) for h in H]
    result = buchberger(lifts, new_order)
    I.seed(result)
    return result


def neighbour_known(C: Cone, facet_normal: Vector, facet_point: Sequence[Fraction]) -> bool:
    """True when C contains the facet point and extends past the facet on the far side."""
    if not C.contains(facet_point):
        return False
    tight = [b for b in C.inequalities if dot(b, facet_point) == 0]
    return all(dot(b, facet_normal) < 0 for b in tight)


@dataclass
class GroebnerFanResult:
    """Maximal cones with their reduced bases; `fan` holds every face."""
    fan: Fan
    maximal_cones: List[Cone]
    bases: List[GroebnerBasis]

    def universal_basis(self) -> List[Polynomial]:
        unique = {g.normalized() for G in self.bases for g in G}
        return sorted(unique, key=lambda p: (p.degree(), p.to_string()))

    def to_dict(self) -> Dict:
        return {
            **self.fan.to_dict(),
            "maximal_cones": [C.to_dict() for C in self.maximal_cones],
            "bases": [G.to_strings() for G in self.bases]
        }


def groebner_fan(
    I: Ideal,
    start_order: Optional[TermOrder] = None,
    budget: Optional[int] = None,
    threads: int = 1
) -> GroebnerFanResult:
    """
    Breadth-first facet-flip traversal of the Groebner fan of I.

    Args:
        I: homogeneous ideal
        start_order: term order of the starting cone (grevlex by default)
        budget: maximum number of maximal cones; exceeding it raises BudgetExceededError
        threads: worker threads used to flip the facets of one layer

    Returns:
        GroebnerFanResult with maximal cones sorted canonically
    """
    start = I.basis(start_order or grevlex_order(I.n))
    start_faces = groebner_cone_faces(start)
    known: Dict[ConeKey, Tuple[GroebnerBasis, ConeFaces]] = {start_faces.cone.key: (start, start_faces)}
    layer = [(start, start_faces)]

    while layer:
        tasks = []
        known_cones = [faces.cone for _, faces in known.values()]
        for G, faces in layer:
            for a, point in faces.facet_points.items():
                if not any(neighbour_known(C, a, point) for C in known_cones):
                    tasks.append((G, faces, a))

        def flip(task):
            G, faces, a = task
            flipped = flip_facet(I, G, a, faces)
            return flipped, groebner_cone_faces(flipped)

        if threads > 1 and len(tasks) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(flip, tasks))
        else:
            results = [flip(t) for t in tasks]

        layer = []
        for flipped, faces in results:
            key = faces.cone.key
            if key in known:
                continue
            known[key] = (flipped, faces)
            layer.append((flipped, faces))
            if budget is not None and len(known) > budget:
                raise BudgetExceededError(f"Groebner fan has more than {budget} maximal cones")

    ordered = sorted(known.values(), key=lambda pair: pair[1].cone.sort_key())
    all_faces = [C for _, faces in ordered for C in faces.faces]
    return GroebnerFanResult(
        fan=Fan.from_cones(I.n, all_faces),
        maximal_cones=[faces.cone for _, faces in ordered],
        bases=[G for G, _ in ordered]
    )


def universal_groebner_basis(I: Ideal, fan: Optional[GroebnerFanResult] = None) -> List[Polynomial]:
    """Union of all reduced Groebner bases, each element scaled to canonical leading coefficient 1."""
    return (fan or groebner_fan(I)).universal_basis()


def is_universal_basis(I: Ideal, U: Sequence[Polynomial], fan: Optional[GroebnerFanResult] = None) -> bool:
    """U lies in I and, for every term order, its leading monomials generate the initial ideal."""
    for u in U:
        if not ideal_member(I, u):
            raise NotInIdealError(f"{u} is not in the ideal")
    fan = fan or groebner_fan(I)
    for G in fan.bases:
        leads = [u.leading_monomial(G.order) for u in U]
        for lead in G.leading:
            if not any(monomial_divides(m, lead) for m in leads):
                return False
    return True
