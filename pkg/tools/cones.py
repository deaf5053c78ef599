"""
Polyhedral Cones and Fans
Canonical H-representations, relative-interior points, normal fans of
lattice polytopes, face enumeration of full-dimensional cones, and exact
linear programs for the cases without combinatorial shortcuts.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import sympy
from sympy.solvers.simplex import InfeasibleLPError, UnboundedLPError, lpmax

from tools.errors import DimensionMismatchError, EmptyConeError, InternalInconsistencyError
from tools.linalg import Vector, dot, project_away, rank, row_basis, sub
from tools.polytopes import Polytope, convex_hull
from tools.ring import WeightVector, primitive_int


ConeKey = Tuple[Tuple[Vector, ...], Tuple[Vector, ...]]


# =============================================================================
# Cone
# =============================================================================

@dataclass(frozen=True)
class Cone:
    """
    Closed cone {w : E w = 0, A w >= 0} in canonical form.

    Equations are the primitive rows of a reduced echelon basis; inequalities
    are facet normals projected onto the span of the cone, made primitive,
    deduplicated and sorted. `interior` is a rational relative-interior point.
    """
    ambient_dim: int
    equations: Tuple[Vector, ...]
    inequalities: Tuple[Vector, ...]
    dim: int
    lineality_dim: int
    interior: WeightVector = field(compare=False, hash=False)

    @property
    def key(self) -> ConeKey:
        return (self.equations, self.inequalities)

    def sort_key(self):
        return (self.dim, self.equations, self.inequalities)

    def contains(self, w: Sequence) -> bool:
        return (all(dot(e, w) == 0 for e in self.equations)
                and all(dot(a, w) >= 0 for a in self.inequalities))

    def contains_relint(self, w: Sequence) -> bool:
        return (all(dot(e, w) == 0 for e in self.equations)
                and all(dot(a, w) > 0 for a in self.inequalities))

    def is_face_of(self, other: "Cone") -> bool:
        return self.dim <= other.dim and self.key != other.key and other.contains(self.interior)

    def to_dict(self) -> Dict:
        return {
            "dim": self.dim,
            "lineality_dim": self.lineality_dim,
            "ineqs": [list(a) for a in self.inequalities],
            "eqs": [list(e) for e in self.equations],
            "interior": [str(x) for x in self.interior]
        }


def make_cone(
    n: int,
    equations: Sequence[Sequence[int]],
    inequalities: Sequence[Sequence[int]],
    interior: Sequence
) -> Cone:
    """Canonicalize an irredundant H-representation with a known relative-interior point."""
    for v in list(equations) + list(inequalities):
        if len(v) != n:
            raise DimensionMismatchError(f"normal of length {len(v)} in R^{n}")
    eqs = tuple(sorted(row_basis(equations, n))) if equations else ()
    ineqs = set()
    for a in inequalities:
        projected = primitive_int(project_away(a, eqs)) if eqs else primitive_int(a)
        if any(projected):
            ineqs.add(projected)
    ineqs_sorted = tuple(sorted(ineqs))
    point = tuple(Fraction(x) for x in interior)
    cone = Cone(
        ambient_dim=n,
        equations=eqs,
        inequalities=ineqs_sorted,
        dim=n - len(eqs),
        lineality_dim=n - rank(list(eqs) + list(ineqs_sorted), n),
        interior=point
    )
    if not cone.contains_relint(point):
        raise InternalInconsistencyError(f"point {[str(x) for x in point]} is not relatively interior")
    return cone


def whole_space(n: int) -> Cone:
    return make_cone(n, (), (), (0,) * n)


def relative_interior_point(C: Cone) -> WeightVector:
    return C.interior


# =============================================================================
# Exact linear programs
# =============================================================================

def _to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _maximize(objective, constraints, symbols) -> Optional[Tuple[Fraction, Tuple[Fraction, ...]]]:
    try:
        optimum, assignment = lpmax(objective, constraints)
    except InfeasibleLPError:
        return None
    except UnboundedLPError as exc:
        raise InternalInconsistencyError("bounded linear program reported unbounded") from exc
    point = tuple(_to_fraction(assignment.get(s, 0)) for s in symbols)
    return _to_fraction(optimum), point


def _box(symbols) -> list:
    return [c for s in symbols for c in (s <= 1, s >= -1)]


def _strict_point(
    n: int,
    equations: Sequence[Sequence[int]],
    inequalities: Sequence[Sequence[int]]
) -> Optional[WeightVector]:
    """A point with E w = 0 and A w > 0, or None."""
    w = sympy.symbols(f"w0:{n}")
    t = sympy.Symbol("t")
    constraints = _box(w) + [t <= 1]
    constraints += [sympy.Eq(sum(int(c) * x for c, x in zip(e, w)), 0) for e in equations if any(e)]
    constraints += [sum(int(c) * x for c, x in zip(a, w)) >= t for a in inequalities if any(a)]
    result = _maximize(t, constraints, w)
    if result is None or result[0] <= 0:
        return None
    return result[1]


def cone_from_hrep(
    n: int,
    inequalities: Sequence[Sequence[int]],
    equations: Sequence[Sequence[int]] = ()
) -> Cone:
    """
    Canonical cone from an arbitrary H-representation.

    Implicit equalities are found with one LP per inequality when no point
    satisfies all inequalities strictly; redundant inequalities are removed
    by minimizing each one over the cone cut out by the others.
    """
    ineqs = [tuple(a) for a in inequalities if any(a)]
    eqs = [tuple(e) for e in equations if any(e)]
    w = sympy.symbols(f"w0:{n}")

    def linear(v):
        return sum(int(c) * x for c, x in zip(v, w))

    if _strict_point(n, eqs, ineqs) is None:
        strict, implicit = [], []
        base = _box(w) + [sympy.Eq(linear(e), 0) for e in eqs] + [linear(a) >= 0 for a in ineqs]
        for a in ineqs:
            result = _maximize(linear(a), base, w)
            (strict if result is not None and result[0] > 0 else implicit).append(a)
        eqs = eqs + implicit
        ineqs = strict

    kept = list(ineqs)
    for a in ineqs:
        others = [b for b in kept if b != a]
        constraints = _box(w) + [sympy.Eq(linear(e), 0) for e in eqs] + [linear(b) >= 0 for b in others]
        result = _maximize(-linear(a), constraints, w)
        if result is not None and result[0] <= 0:
            kept = others

    point = _strict_point(n, eqs, kept)
    if point is None:
        raise EmptyConeError("cone has empty relative interior")
    return make_cone(n, eqs, kept, point)


def relint_intersection_point(C: Cone, D: Cone) -> Optional[WeightVector]:
    """A point in relint(C) and relint(D), or None when they are disjoint."""
    if C.ambient_dim != D.ambient_dim:
        raise DimensionMismatchError("cones in different ambient spaces")
    return _strict_point(
        C.ambient_dim,
        list(C.equations) + list(D.equations),
        list(C.inequalities) + list(D.inequalities)
    )


# =============================================================================
# Fans
# =============================================================================

@dataclass
class Fan:
    """Cones of a fan, sorted by (dim, H-representation); `maximal` indexes the inclusion-maximal ones."""
    ambient_dim: int
    cones: List[Cone]
    maximal: List[int]

    @classmethod
    def from_cones(cls, n: int, cones: Sequence[Cone]) -> "Fan":
        unique: Dict[ConeKey, Cone] = {}
        for C in cones:
            unique.setdefault(C.key, C)
        ordered = sorted(unique.values(), key=Cone.sort_key)
        maximal = [
            i for i, C in enumerate(ordered)
            if not any(C.is_face_of(D) for D in ordered if D.dim > C.dim)
        ]
        return cls(ambient_dim=n, cones=ordered, maximal=maximal)

    def is_empty(self) -> bool:
        return not self.cones

    def dim(self) -> int:
        return max((C.dim for C in self.cones), default=-1)

    def by_dimension(self) -> Dict[int, List[Cone]]:
        grouped: Dict[int, List[Cone]] = {}
        for C in self.cones:
            grouped.setdefault(C.dim, []).append(C)
        return grouped

    def f_vector(self) -> Tuple[int, ...]:
        """Cone counts indexed by dimension 0..n."""
        counts = [0] * (self.ambient_dim + 1)
        for C in self.cones:
            counts[C.dim] += 1
        return tuple(counts)

    def incidence(self) -> List[Tuple[int, int]]:
        """Pairs (i, j) with cone i a proper face of cone j."""
        return [
            (i, j)
            for i, C in enumerate(self.cones)
            for j, D in enumerate(self.cones)
            if C.dim < D.dim and D.contains(C.interior)
        ]

    def locate(self, w: Sequence) -> Optional[Cone]:
        """The cone whose relative interior contains w."""
        for C in self.cones:
            if C.contains_relint(w):
                return C
        return None

    def contains(self, w: Sequence) -> bool:
        return any(self.cones[i].contains(w) for i in self.maximal)

    def to_dict(self) -> Dict:
        return {
            "cones": [C.to_dict() for C in self.cones],
            "maximal": list(self.maximal),
            "f_vector": list(self.f_vector())
        }


# =============================================================================
# Normal fans (minimum convention)
# =============================================================================

def _covering_faces(P: Polytope, face: FrozenSet[int], face_dim: int) -> List[FrozenSet[int]]:
    if face_dim + 1 > P.dim:
        return []
    return [G for G in P.faces[face_dim + 1] if face < G]


def normal_cone(P: Polytope, face: FrozenSet[int], face_dim: Optional[int] = None) -> Cone:
    """Closed cone of weights minimized on (a superset of) the given face of P."""
    n = P.ambient_dim
    if face_dim is None:
        face_dim = P.face_dim(face)
    members = sorted(face)
    u0 = P.vertices[members[0]]
    equations = [sub(P.vertices[i], u0) for i in members[1:]]
    inequalities = []
    for G in _covering_faces(P, face, face_dim):
        v = min(G - face)
        inequalities.append(sub(P.vertices[v], u0))
    interior = [0] * n
    for facet in P.facets:
        if face <= facet.vertices:
            interior = [x + y for x, y in zip(interior, facet.normal)]
    if face_dim == P.dim:
        interior = [0] * n
    return make_cone(n, equations, inequalities, interior)


def normal_fan(P: Polytope, min_face_dim: int = 0) -> Fan:
    """Normal fan of P restricted to faces of dimension >= min_face_dim."""
    cones = [
        normal_cone(P, face, d)
        for d, face in P.all_faces()
        if d >= min_face_dim
    ]
    return Fan.from_cones(P.ambient_dim, cones)


# =============================================================================
# Faces of a full-dimensional cone
# =============================================================================

@dataclass
class ConeFaces:
    """All faces of a full-dimensional cone, with its facet normals and their relative-interior points."""
    cone: Cone
    faces: List[Cone]
    facet_points: Dict[Vector, WeightVector]


def full_cone_faces(n: int, normals: Sequence[Sequence[int]], interior: Sequence[int]) -> ConeFaces:
    """
    Faces of C = {w : a . w >= 0} given a point strictly inside.

    Each normal a is scaled onto the hyperplane y . interior = S; the convex
    hull Q of those points is a cross-section of the dual cone. Facets of C
    are the vertices of Q, and a face G of Q is dual to the face of C where
    the normals in G are tight. Extreme rays of C come from the facets of Q.
    """
    h = tuple(int(x) for x in interior)
    normals = sorted(set(primitive_int(a) for a in normals if any(a)))
    if not normals:
        C = whole_space(n)
        return ConeFaces(cone=C, faces=[C], facet_points={})

    values = [dot(a, h) for a in normals]
    if any(s <= 0 for s in values):
        raise InternalInconsistencyError("interior point violates a cone inequality")
    S = lcm(*values)
    scaled = [tuple(x * (S // s) for x in a) for a, s in zip(normals, values)]
    Q = convex_hull(scaled)
    normal_of_vertex = {p: a for p, a in zip(scaled, normals)}
    vertex_normals = [normal_of_vertex[v] for v in Q.vertices]

    rays: List[Tuple[FrozenSet[int], Tuple[Fraction, ...]]] = []
    for facet in Q.facets:
        ray = tuple(Fraction(x) - Fraction(facet.offset, S) * y for x, y in zip(facet.normal, h))
        rays.append((facet.vertices, ray))

    def point_of(face: FrozenSet[int], face_dim: int) -> Tuple[Fraction, ...]:
        if face_dim == Q.dim:
            return (Fraction(0),) * n
        total = [Fraction(0)] * n
        for tight, ray in rays:
            if face <= tight:
                total = [x + y for x, y in zip(total, ray)]
        return tuple(total)

    C = make_cone(n, (), vertex_normals, h)
    faces = [C]
    facet_points: Dict[Vector, WeightVector] = {}
    for d, face in Q.all_faces():
        equations = [vertex_normals[i] for i in face]
        inequalities = [vertex_normals[min(G - face)] for G in _covering_faces(Q, face, d)]
        point = point_of(face, d)
        faces.append(make_cone(n, equations, inequalities, point))
        if d == 0:
            facet_points[vertex_normals[min(face)]] = point
    return ConeFaces(cone=C, faces=faces, facet_points=facet_points)
