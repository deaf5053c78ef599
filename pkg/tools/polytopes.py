"""
Lattice Polytopes
Convex hulls with full face lattices, Newton polytopes, Minkowski sums,
and the f-vector maxima lambda_j(d, n): exhaustive enumeration for exact
values, seeded search for lower bounds on larger grids.
"""
import heapq
import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from tools.errors import DimensionMismatchError, DomainError, ParameterError, ZeroPolynomialError
from tools.linalg import Vector, add, dot, normal_of, nullspace, rref, sub
from tools.ring import Polynomial, monomials_of_degree


FVector = Tuple[int, ...]


# =============================================================================
# Polytope
# =============================================================================

@dataclass(frozen=True)
class Facet:
    """Inner normal (ambient coordinates) with normal . x >= offset on P, tight exactly on the facet."""
    normal: Vector
    offset: int
    vertices: FrozenSet[int]


@dataclass(frozen=True)
class Polytope:
    """
    Lattice polytope with its face lattice.

    Faces are stored as sets of vertex indices, grouped by dimension;
    faces[dim] holds the polytope itself.
    """
    points: Tuple[Vector, ...]
    vertices: Tuple[Vector, ...]
    dim: int
    ambient_dim: int
    facets: Tuple[Facet, ...]
    faces: Tuple[Tuple[FrozenSet[int], ...], ...]
    equations: Tuple[Tuple[Vector, int], ...] = field(default=())

    def f_vector(self) -> FVector:
        return f_vector(self)

    def is_point(self) -> bool:
        return self.dim == 0

    def face_points(self, face: FrozenSet[int]) -> List[Vector]:
        return [self.vertices[i] for i in sorted(face)]

    def all_faces(self) -> List[Tuple[int, FrozenSet[int]]]:
        """Every nonempty face with its dimension, the polytope included."""
        return [(d, face) for d, group in enumerate(self.faces) for face in group]

    def face_dim(self, face: FrozenSet[int]) -> int:
        for d, group in enumerate(self.faces):
            if face in group:
                return d
        raise DomainError(f"vertex set {sorted(face)} is not a face")

    def contains(self, x: Sequence[int]) -> bool:
        if any(dot(e, x) != c for e, c in self.equations):
            return False
        return all(dot(f.normal, x) >= f.offset for f in self.facets)

    def euler_holds(self) -> bool:
        """Alternating sum of proper face counts equals 1 - (-1)^dim."""
        total = sum((-1) ** j * f for j, f in enumerate(self.f_vector()))
        return total == 1 - (-1) ** self.dim

    def to_dict(self) -> Dict:
        return {
            "dim": self.dim,
            "vertices": [list(v) for v in self.vertices],
            "f_vector": list(self.f_vector())
        }


# =============================================================================
# Facets of a full-dimensional point set in Z^k
# =============================================================================

def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _bits(mask: int) -> List[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _mask(indices: Iterable[int]) -> int:
    out = 0
    for i in indices:
        out |= 1 << int(i)
    return out


def _exhaustive_facets(proj: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Supporting hyperplanes through every k-subset of the points."""
    points = [tuple(int(x) for x in row) for row in proj]
    k = proj.shape[1]
    found = set()
    for combo in itertools.combinations(range(len(points)), k):
        p0 = points[combo[0]]
        nu = normal_of([sub(points[i], p0) for i in combo[1:]], k)
        if not any(nu):
            continue
        c = dot(nu, p0)
        values = [dot(nu, q) - c for q in points]
        if all(v >= 0 for v in values):
            found.add(nu + (c,))
        elif all(v <= 0 for v in values):
            found.add(tuple(-x for x in nu) + (-c,))
    table = np.array(sorted(found), dtype=np.int64).reshape(-1, k + 1)
    return table[:, :k], table[:, k]


def _certified_facets(proj: np.ndarray) -> Optional[Tuple[np.ndarray, np.ndarray]]:
    """
    Facets from qhull, each re-derived and checked in integer arithmetic.

    Every triangulated simplex gets its primitive normal from cofactor
    determinants; the hyperplane must pass through the simplex and leave
    all points on its inner side. Returns None when qhull fails or any
    check does not hold.
    """
    k = proj.shape[1]
    if k == 1:
        column = proj[:, 0]
        return np.array([[1], [-1]], dtype=np.int64), np.array([column.min(), -column.max()], dtype=np.int64)
    try:
        hull = ConvexHull(proj.astype(float))
    except (QhullError, ValueError):
        return None

    simplices = hull.simplices
    base = proj[simplices[:, 0]]
    spans = proj[simplices[:, 1:]] - base[:, None, :]
    normals = np.empty((len(simplices), k), dtype=np.int64)
    for i in range(k):
        minor = np.delete(spans, i, axis=2).astype(float)
        normals[:, i] = (-1) ** i * np.rint(np.linalg.det(minor)).astype(np.int64)

    divisor = np.gcd.reduce(np.abs(normals), axis=1)
    flat = divisor > 0
    if not flat.any():
        return None
    normals = normals[flat] // divisor[flat, None]
    base, simplices = base[flat], simplices[flat]
    offsets = np.einsum("ij,ij->i", normals, base)

    side = normals @ proj.sum(axis=0) - len(proj) * offsets
    if np.any(side == 0):
        return None
    sign = np.where(side > 0, 1, -1)
    normals = normals * sign[:, None]
    offsets = offsets * sign

    values = proj @ normals.T - offsets
    if np.any(values < 0):
        return None
    if np.any(values[simplices, np.arange(len(simplices))[:, None]] != 0):
        return None

    table = np.unique(np.column_stack([normals, offsets]), axis=0)
    return table[:, :k], table[:, k]


def _facet_table(proj: np.ndarray, exhaustive: bool = False) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(normals, offsets, tight) with tight[i, r] True when point i lies on facet r."""
    found = None if exhaustive else _certified_facets(proj)
    if found is None:
        found = _exhaustive_facets(proj)
    normals, offsets = found
    tight = (proj @ normals.T - offsets) == 0
    return normals, offsets, tight


def _vertex_ids(tight: np.ndarray) -> np.ndarray:
    """Points cut out by the facets through them."""
    t = tight.astype(np.int64)
    shared = t @ t.T
    own = np.diag(shared)
    alone = (shared == own[:, None]).sum(axis=1) == 1
    return np.flatnonzero((own > 0) & alone)


def _edge_count(tight_vertices: np.ndarray) -> int:
    """Vertex pairs whose smallest common face is the segment between them."""
    t = tight_vertices.astype(np.int64)
    pair = t @ t.T
    triple = (t[:, None, :] * t[None, :, :]) @ t.T
    inside = (triple == pair[:, :, None]).sum(axis=2)
    upper = np.triu(np.ones(pair.shape, dtype=bool), 1)
    return int(np.count_nonzero(upper & (inside == 2) & (pair > 0)))


def _face_lattice(facet_masks: Sequence[int], dim: int, vertex_count: int) -> List[List[int]]:
    """
    Faces as vertex bitmasks, grouped by dimension.

    The (i-1)-faces are the inclusion-maximal proper intersections of an
    i-face with a facet.
    """
    grouped: List[List[int]] = [[] for _ in range(dim + 1)]
    grouped[dim] = [(1 << vertex_count) - 1]
    if dim == 0:
        return grouped
    grouped[dim - 1] = sorted(set(facet_masks))
    for i in range(dim - 1, 0, -1):
        current = set(grouped[i])
        candidates = {G & F for G in grouped[i] for F in grouped[dim - 1]} - current - {0}
        maximal: List[int] = []
        for c in sorted(candidates, key=_popcount, reverse=True):
            if not any(c & m == c for m in maximal):
                maximal.append(c)
        grouped[i - 1] = sorted(maximal)
    return grouped


def _ridges_closed(grouped: List[List[int]], dim: int) -> bool:
    """Every ridge lies in exactly two facets."""
    if dim < 2:
        return True
    facets = grouped[dim - 1]
    return all(sum(1 for F in facets if R & F == R) == 2 for R in grouped[dim - 2])


def _fast_f_vector(proj: np.ndarray) -> Tuple[FVector, np.ndarray]:
    """f-vector and vertex row indices of a full-dimensional point set in Z^k."""
    k = proj.shape[1]
    _, _, tight = _facet_table(proj)
    vertex_ids = _vertex_ids(tight)
    v, f = len(vertex_ids), tight.shape[1]
    if k == 1:
        return (2,), vertex_ids
    if k == 2:
        return (v, v), vertex_ids
    if k == 3:
        return (v, v + f - 2, f), vertex_ids
    if k == 4:
        e = _edge_count(tight[vertex_ids])
        return (v, e, e + f - v, f), vertex_ids
    masks = [_mask(np.flatnonzero(tight[vertex_ids, r])) for r in range(f)]
    grouped = _face_lattice(masks, k, v)
    return tuple(len(grouped[j]) for j in range(k)), vertex_ids


# =============================================================================
# Convex hull
# =============================================================================

def _assemble(
    pts: List[Vector],
    proj: np.ndarray,
    pivots: List[int],
    equations: Tuple[Tuple[Vector, int], ...],
    exhaustive: bool
) -> Optional[Polytope]:
    n, k = len(pts[0]), len(pivots)
    normals, offsets, tight = _facet_table(proj, exhaustive)
    vertex_ids = _vertex_ids(tight)
    tight_vertices = tight[vertex_ids]

    masks = [_mask(np.flatnonzero(tight_vertices[:, r])) for r in range(len(offsets))]
    grouped = _face_lattice(masks, k, len(vertex_ids))
    if not exhaustive and not _ridges_closed(grouped, k):
        return None

    facets = []
    for r, mask in enumerate(masks):
        ambient = [0] * n
        for j, col in enumerate(pivots):
            ambient[col] = int(normals[r, j])
        facets.append(Facet(normal=tuple(ambient), offset=int(offsets[r]), vertices=frozenset(_bits(mask))))
    facets.sort(key=lambda f: sorted(f.vertices))

    faces = tuple(
        tuple(sorted((frozenset(_bits(m)) for m in group), key=sorted))
        for group in grouped
    )
    return Polytope(
        points=tuple(pts),
        vertices=tuple(pts[int(i)] for i in vertex_ids),
        dim=k,
        ambient_dim=n,
        facets=tuple(facets),
        faces=faces,
        equations=equations
    )


def convex_hull(points: Iterable[Sequence[int]]) -> Polytope:
    """
    Convex hull of integer points, with vertices, facets and the full face lattice.

    The points are projected onto the pivot coordinates of their affine
    hull. Facets come from qhull and are certified exactly; if that fails,
    or the face lattice does not close up, every k-subset is tried instead.
    """
    pts = sorted(set(tuple(int(x) for x in p) for p in points))
    if not pts:
        raise DomainError("convex hull of an empty point set")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionMismatchError("points of different lengths")

    base = pts[0]
    diffs = [sub(p, base) for p in pts[1:]]
    _, pivots = rref(diffs, n) if diffs else ([], [])
    normals = nullspace(diffs, n) if diffs else nullspace([], n)
    equations = tuple((e, dot(e, base)) for e in normals)

    if not pivots:
        return Polytope(
            points=tuple(pts), vertices=(base,), dim=0, ambient_dim=n,
            facets=(), faces=((frozenset([0]),),), equations=equations
        )

    proj = np.array([[p[c] for c in pivots] for p in pts], dtype=np.int64)
    hull = _assemble(pts, proj, pivots, equations, exhaustive=False)
    if hull is None:
        hull = _assemble(pts, proj, pivots, equations, exhaustive=True)
    return hull


def f_vector(P: Polytope) -> FVector:
    """(f_0, ..., f_{dim-1}): proper nonempty faces by dimension."""
    return tuple(len(P.faces[j]) for j in range(P.dim))


def newton_polytope(f: Polynomial) -> Polytope:
    if f.is_zero():
        raise ZeroPolynomialError("Newton polytope of the zero polynomial")
    return convex_hull(f.terms.keys())


def minkowski_sum(P: Polytope, Q: Polytope) -> Polytope:
    if P.ambient_dim != Q.ambient_dim:
        raise DimensionMismatchError(f"Minkowski sum of polytopes in R^{P.ambient_dim} and R^{Q.ambient_dim}")
    return convex_hull(add(u, v) for u in P.vertices for v in Q.vertices)


def minkowski_sum_all(polytopes: Sequence[Polytope]) -> Polytope:
    total = polytopes[0]
    for Q in polytopes[1:]:
        total = minkowski_sum(total, Q)
    return total


def dilated_simplex_points(d: int, n: int) -> List[Vector]:
    """Lattice points of d times the standard (n-1)-simplex."""
    if d < 1 or n < 2:
        raise ParameterError(f"dilated simplex needs d >= 1 and n >= 2, got d={d}, n={n}")
    return monomials_of_degree(d, n)


# =============================================================================
# lambda_j(d, n)
# =============================================================================

@dataclass
class LambdaResult:
    d: int
    n: int
    values: Tuple[int, ...]
    exact: bool
    witnesses: Tuple[Tuple[Vector, ...], ...]
    nodes: int = 0
    frontier: int = 0

    def to_dict(self) -> Dict:
        return {
            "d": self.d,
            "n": self.n,
            "values": list(self.values),
            "exact": self.exact,
            "witnesses": [[list(v) for v in w] for w in self.witnesses],
            "nodes": self.nodes,
            "frontier": self.frontier
        }


class SimplexGrid:
    """
    Lattice points of d * Delta_{n-1}, with point subsets as bitmasks.

    Dropping the last coordinate maps the grid isomorphically onto a
    full-dimensional lattice point set in Z^{n-1}, which is where hulls are
    taken. Evaluations are cached by mask.
    """

    def __init__(self, d: int, n: int):
        self.d = d
        self.n = n
        self.width = n - 1
        self.points = dilated_simplex_points(d, n)
        self.index = {p: i for i, p in enumerate(self.points)}
        self.proj = np.array([p[:-1] for p in self.points], dtype=np.int64)
        self.full = (1 << len(self.points)) - 1
        self._cache: Dict[int, Tuple[FVector, int]] = {}
        self._tables: Optional[np.ndarray] = None

    def __len__(self) -> int:
        return len(self.points)

    def mask_of(self, points: Iterable[Sequence[int]]) -> int:
        return _mask(self.index[tuple(p)] for p in points if tuple(p) in self.index)

    def vertices_of(self, mask: int) -> Tuple[Vector, ...]:
        return tuple(self.points[i] for i in _bits(mask))

    def evaluate(self, mask: int) -> Tuple[FVector, int]:
        """(f_0, ..., f_{n-2}) of conv(mask), zero-padded, and the mask of its vertices."""
        cached = self._cache.get(mask)
        if cached is not None:
            return cached
        ids = np.array(_bits(mask), dtype=np.int64)
        pts = self.proj[ids]
        full_dim = len(ids) > self.width and np.linalg.matrix_rank(pts[1:] - pts[0]) == self.width
        if full_dim:
            values, local = _fast_f_vector(pts)
            vertex_mask = _mask(ids[local])
        else:
            P = convex_hull(self.points[i] for i in ids)
            values = P.f_vector()
            vertex_mask = self.mask_of(P.vertices)
        padded = tuple(values) + (0,) * (self.width - len(values))
        self._cache[mask] = (padded, vertex_mask)
        return padded, vertex_mask

    def canonical(self, mask: int) -> Tuple[int, ...]:
        """Smallest sorted index tuple over all coordinate permutations."""
        if self._tables is None:
            self._tables = np.array([
                [self.index[tuple(p[i] for i in perm)] for p in self.points]
                for perm in itertools.permutations(range(self.n))
            ], dtype=np.int64)
        images = np.sort(self._tables[:, _bits(mask)], axis=1)
        return min(map(tuple, images.tolist()))


def lambda_enumerate(d: int, n: int, budget: Optional[int] = None) -> LambdaResult:
    """
    Maximize each f_j over lattice polytopes inside d * Delta_{n-1}.

    The search descends from the full dilated simplex: the children of P are
    conv(L(P) minus v) for each vertex v, where L(P) is the lattice point set
    of P (and is also the lattice point set of the child). Lattice point sets
    are deduplicated up to permutations of the coordinates.

    Args:
        d: dilation factor, d >= 1
        n: number of coordinates, n >= 2
        budget: maximum number of polytopes examined; None for no limit

    Returns:
        LambdaResult; exact is False when the budget stopped the search, and
        the values are then lower bounds.
    """
    grid = SimplexGrid(d, n)
    best = [0] * grid.width
    witnesses = [0] * grid.width

    seen = {grid.canonical(grid.full)}
    stack = [grid.full]
    nodes = 0
    while stack:
        if budget is not None and nodes >= budget:
            break
        lattice = stack.pop()
        nodes += 1
        values, vertex_mask = grid.evaluate(lattice)
        for j, value in enumerate(values):
            if value > best[j]:
                best[j] = value
                witnesses[j] = vertex_mask
        if _popcount(vertex_mask) < 2:
            continue
        for v in _bits(vertex_mask):
            child = lattice & ~(1 << v)
            key = grid.canonical(child)
            if key not in seen:
                seen.add(key)
                stack.append(child)

    return LambdaResult(
        d=d, n=n,
        values=tuple(best),
        exact=not stack,
        witnesses=tuple(grid.vertices_of(m) for m in witnesses),
        nodes=nodes,
        frontier=len(stack)
    )


# -----------------------------------------------------------------------------
# Seeded search
# -----------------------------------------------------------------------------

def _orbit_seeds(grid: SimplexGrid) -> List[int]:
    """Coordinate-permutation orbits of each partition of d, and pairwise unions."""
    orbits: Dict[Tuple[int, ...], int] = {}
    for i, p in enumerate(grid.points):
        key = tuple(sorted(p, reverse=True))
        orbits[key] = orbits.get(key, 0) | 1 << i
    singles = [orbits[key] for key in sorted(orbits)]
    return singles + [a | b for a, b in itertools.combinations(singles, 2)]


def _quadric_seeds(grid: SimplexGrid, rng: random.Random, ellipsoids: int) -> List[int]:
    """
    Level sets of sum a_i p_i^2 - sum b_i p_i on the grid, largest first.

    Points on one level set of a strictly convex function are in convex
    position. Spheres take a = 1 and a non-decreasing shift b starting at 0;
    ellipsoids draw a from {1, 2, 3}.
    """
    d, n = grid.d, grid.n
    quadrics = [
        ((1,) * n, (0,) + shift)
        for shift in itertools.combinations_with_replacement(range(2 * d + 1), n - 1)
    ]
    for _ in range(ellipsoids):
        a = tuple(rng.choice((1, 2, 3)) for _ in range(n))
        quadrics.append((a, tuple(rng.randint(0, 2 * ai * d) for ai in a)))

    found = set()
    for a, b in quadrics:
        levels: Dict[int, int] = {}
        for i, p in enumerate(grid.points):
            value = sum(ai * x * x - bi * x for ai, bi, x in zip(a, b, p))
            levels[value] = levels.get(value, 0) | 1 << i
        found.update(m for m in levels.values() if _popcount(m) > n - 1)
    return sorted(found, key=lambda m: (-_popcount(m), m))


class _Search:
    """Shared state of one lambda_search run: budget, pool of vertex sets, best per j."""

    def __init__(self, grid: SimplexGrid, budget: int):
        self.grid = grid
        self.budget = budget
        self.spent = 0
        self.pool: Dict[int, FVector] = {}
        self.best = [0] * grid.width
        self.witnesses = [0] * grid.width

    def exhausted(self) -> bool:
        return self.spent >= self.budget

    def propose(self, mask: int) -> Tuple[FVector, int]:
        self.spent += 1
        values, vertex_mask = self.grid.evaluate(mask)
        self.pool.setdefault(vertex_mask, values)
        for j, value in enumerate(values):
            if value > self.best[j]:
                self.best[j] = value
                self.witnesses[j] = vertex_mask
        return values, vertex_mask

    def leaders(self, j: int, count: int) -> List[int]:
        ranked = sorted(self.pool.items(), key=lambda item: (-item[1][j], item[0]))
        return [mask for mask, _ in ranked[:count]]

    def best_first(self, j: int, quota: int, starts: Sequence[int]):
        """Expand the set with the largest f_j next; children drop one vertex."""
        stop = min(self.budget, self.spent + quota)
        counter = itertools.count()
        heap = []
        seen = set()
        for mask in starts:
            if mask not in seen:
                seen.add(mask)
                heap.append((-self.grid.evaluate(mask)[0][j], next(counter), mask))
        heapq.heapify(heap)
        while heap and self.spent < stop:
            _, _, mask = heapq.heappop(heap)
            for v in _bits(self.grid.evaluate(mask)[1]):
                child = mask & ~(1 << v)
                if child in seen or _popcount(child) < 2:
                    continue
                seen.add(child)
                values, _ = self.propose(child)
                heapq.heappush(heap, (-values[j], next(counter), child))
                if self.spent >= stop:
                    break

    def anneal(self, j: int, quota: int, starts: Sequence[int], rng: random.Random,
               hot: float = 1.0, cold: float = 0.05):
        """Add, remove and swap single grid points on vertex sets, Metropolis acceptance on f_j."""
        if not starts:
            return
        size = len(self.grid)
        stop = min(self.budget, self.spent + quota)
        steps = max(1, quota // len(starts))
        for start in starts:
            current = start
            score = self.grid.evaluate(current)[0][j]
            for t in range(steps):
                if self.spent >= stop:
                    return
                temperature = hot * (cold / hot) ** (t / steps)
                members = _bits(current)
                outside = rng.randrange(size)
                move = rng.random()
                if move < 0.4 or len(members) <= 2:
                    candidate = current | 1 << outside
                elif move < 0.7:
                    candidate = current & ~(1 << rng.choice(members))
                else:
                    candidate = (current & ~(1 << rng.choice(members))) | 1 << outside
                if candidate == current or _popcount(candidate) < 2:
                    continue
                values, vertex_mask = self.propose(candidate)
                delta = values[j] - score
                if delta >= 0 or rng.random() < math.exp(delta / temperature):
                    current, score = vertex_mask, values[j]


def lambda_search(
    d: int,
    n: int,
    budget: int,
    seed: int = 0,
    seeds: Sequence[Sequence[Sequence[int]]] = (),
    ellipsoids: int = 200,
    restarts: int = 8
) -> LambdaResult:
    """
    Lower bounds on lambda_j(d, n) by seeded search.

    Seeds are the full grid, caller-supplied vertex sets (for instance the
    witnesses of lambda(d - 1, n) shifted by e_1), permutation orbits of the
    partitions of d and quadric level sets. One quarter of the budget goes to
    seeds; the rest is split over the targets j, each getting a best-first
    descent followed by annealing restarts from the best sets found so far.
    Every polytope evaluated updates all f_j maxima, and the witnesses'
    f-vectors are recomputed through convex_hull before returning.

    Args:
        d: dilation factor, d >= 1
        n: number of coordinates, n >= 2
        budget: number of candidate point sets evaluated
        seed: random seed; the run is deterministic given the arguments
        seeds: extra vertex sets, points outside the grid are dropped
        ellipsoids: random quadrics tried besides the spheres
        restarts: annealing starting points per target

    Returns:
        LambdaResult with exact False.
    """
    if budget < 1:
        raise ParameterError(f"search budget must be positive, got {budget}")
    grid = SimplexGrid(d, n)
    rng = random.Random(seed)
    search = _Search(grid, budget)

    candidates = [grid.full]
    candidates += [m for m in (grid.mask_of(s) for s in seeds) if _popcount(m) > 1]
    candidates += _orbit_seeds(grid)
    candidates += _quadric_seeds(grid, rng, ellipsoids)
    seed_quota = max(1, budget // 4)
    for mask in dict.fromkeys(candidates):
        if search.spent >= seed_quota:
            break
        search.propose(mask)

    share = (budget - search.spent) // grid.width
    for j in range(grid.width):
        search.best_first(j, share // 3, [grid.full] + search.leaders(j, restarts))
        search.anneal(j, share - share // 3, search.leaders(j, restarts), rng)

    verified = {}
    for mask in set(search.witnesses):
        verified[mask] = convex_hull(grid.vertices_of(mask)).f_vector()
    values, witnesses = [], []
    for j in range(grid.width):
        mask = max(sorted(verified), key=lambda m: verified[m][j] if j < len(verified[m]) else 0)
        values.append(verified[mask][j] if j < len(verified[mask]) else 0)
        witnesses.append(grid.vertices_of(mask))

    return LambdaResult(
        d=d, n=n,
        values=tuple(values),
        exact=False,
        witnesses=tuple(witnesses),
        nodes=search.spent,
        frontier=0
    )


def shifted_witnesses(result: LambdaResult) -> List[Tuple[Vector, ...]]:
    """Witnesses of lambda(d, n) translated by e_1 into (d + 1) * Delta_{n-1}."""
    unit = (1,) + (0,) * (result.n - 1)
    return [tuple(add(p, unit) for p in w) for w in result.witnesses]


def lambda_table(
    max_n: int,
    max_d: int,
    budget: Optional[int] = None,
    min_n: int = 2,
    search: bool = False
) -> Dict[Tuple[int, int], LambdaResult]:
    """
    lambda(d, n) for all min_n <= n <= max_n and 1 <= d <= max_d, keyed by (n, d).

    With search, every entry is a lambda_search lower bound seeded with the
    shifted witnesses of the entry for d - 1.
    """
    table: Dict[Tuple[int, int], LambdaResult] = {}
    for n in range(min_n, max_n + 1):
        for d in range(1, max_d + 1):
            if search:
                previous = table.get((n, d - 1))
                seeds = shifted_witnesses(previous) if previous else []
                table[(n, d)] = lambda_search(d, n, budget or 1, seeds=seeds)
            else:
                table[(n, d)] = lambda_enumerate(d, n, budget)
    return table
