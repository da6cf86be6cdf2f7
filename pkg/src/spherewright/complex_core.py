"""
Pure simplicial complexes stored by their facets.

Simplices are plain sorted tuples of positive integer labels. A complex keeps
only its facets; lower faces are enumerated on demand and memoized per
dimension. Everything here is immutable, so instances may be shared freely.
"""

from collections import Counter, defaultdict
from enum import Enum
from itertools import combinations
from typing import Iterable

from .errors import FaceNotInComplex, MixedDimensions, WrongDimension

Simplex = tuple


def simplex(vertices: Iterable[int]) -> Simplex:
    """Normalize an iterable of labels into a sorted tuple; reject duplicates."""
    vs = tuple(sorted(vertices))
    if len(set(vs)) != len(vs):
        raise ValueError(f"duplicate vertex in {vs}")
    return vs


def subsets(face: Simplex, size: int):
    return combinations(face, size)


class SimplicialComplex:
    """A pure simplicial complex given by its facets.

    The void complex has no facets at all; the complex ``{()}`` consisting of
    the empty face alone (what the link of a facet returns) has the single
    facet ``()`` and dimension -1.
    """

    __slots__ = ("facets", "dim", "_faces")

    def __init__(self, facets=()):
        fs = frozenset(simplex(f) for f in facets)
        dims = {len(f) - 1 for f in fs}
        if len(dims) > 1:
            raise MixedDimensions(f"facets of dimensions {sorted(dims)}")
        self.facets = fs
        self.dim = dims.pop() if dims else -1
        self._faces = {}

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self):
        return f"SimplicialComplex(dim={self.dim}, facets={len(self.facets)})"

    def __len__(self):
        return len(self.facets)

    def __contains__(self, face):
        face = tuple(sorted(face))
        k = len(face) - 1
        if k > self.dim:
            return False
        if k == -1:
            return bool(self.facets)
        return face in self.faces(k)

    @property
    def vertices(self) -> tuple:
        return tuple(v for (v,) in sorted(self.faces(0)))

    def sorted_facets(self) -> list:
        return sorted(self.facets)

    def faces(self, k: int) -> frozenset:
        """All k-dimensional faces."""
        if k > self.dim or k < 0:
            return frozenset()
        cached = self._faces.get(k)
        if cached is None:
            if k == self.dim:
                cached = self.facets
            else:
                cached = frozenset(s for f in self.facets for s in combinations(f, k + 1))
            self._faces[k] = cached
        return cached

    def all_faces(self) -> frozenset:
        """Every nonempty face."""
        out = set()
        for k in range(self.dim + 1):
            out |= self.faces(k)
        return frozenset(out)

    def relabel(self, mapping) -> "SimplicialComplex":
        return SimplicialComplex(tuple(mapping[v] for v in f) for f in self.facets)


def build_complex(facets) -> SimplicialComplex:
    """Closure of a set of equal-dimensional facets. Repeated facets are merged."""
    return SimplicialComplex(facets)


def f_vector(X: SimplicialComplex) -> tuple:
    return tuple(len(X.faces(k)) for k in range(X.dim + 1))


def euler_characteristic(X: SimplicialComplex) -> int:
    return sum((-1) ** k * c for k, c in enumerate(f_vector(X)))


def link(X: SimplicialComplex, F) -> SimplicialComplex:
    F = tuple(sorted(F))
    if F not in X:
        raise FaceNotInComplex(f"{F} is not a face")
    fs = set(F)
    return SimplicialComplex(
        tuple(v for v in G if v not in fs) for G in X.facets if fs.issubset(G)
    )


def star(X: SimplicialComplex, F) -> SimplicialComplex:
    F = tuple(sorted(F))
    if F not in X:
        raise FaceNotInComplex(f"{F} is not a face")
    fs = set(F)
    return SimplicialComplex(G for G in X.facets if fs.issubset(G))


def ridge_counts(X: SimplicialComplex) -> Counter:
    """How many facets contain each codimension-one face."""
    return Counter(r for f in X.facets for r in combinations(f, X.dim))


def boundary_complex(X: SimplicialComplex) -> SimplicialComplex:
    if X.dim < 1:
        raise WrongDimension("boundary needs dimension >= 1")
    return SimplicialComplex(r for r, c in ridge_counts(X).items() if c == 1)


def _components(vertices, edges) -> int:
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in vertices})


def is_connected(X: SimplicialComplex) -> bool:
    vs = X.vertices
    if not vs:
        return False
    return _components(vs, X.faces(1)) == 1


def is_strongly_connected(X: SimplicialComplex) -> bool:
    """Facets connected through shared codimension-one faces."""
    facets = list(X.facets)
    if not facets:
        return False
    by_ridge = defaultdict(list)
    for i, f in enumerate(facets):
        for r in combinations(f, X.dim):
            by_ridge[r].append(i)
    adj = [(ids[0], j) for ids in by_ridge.values() for j in ids[1:]]
    return _components(range(len(facets)), adj) == 1


def is_closed_pseudomanifold_3(X: SimplicialComplex) -> bool:
    """Strongly connected, every triangle in exactly two tetrahedra, and all
    edge and vertex links connected."""
    if X.dim != 3 or not is_strongly_connected(X):
        return False
    if any(c != 2 for c in ridge_counts(X).values()):
        return False
    for k in (0, 1):
        for F in X.faces(k):
            if not is_connected(link(X, F)):
                return False
    return True


class SurfaceType(str, Enum):
    SPHERE_2 = "SPHERE_2"
    BALL_2 = "BALL_2"
    CIRCLE_1 = "CIRCLE_1"
    OTHER = "OTHER"


def _is_circle(X: SimplicialComplex) -> bool:
    if X.dim != 1 or not is_connected(X):
        return False
    deg = Counter(v for e in X.facets for v in e)
    return all(d == 2 for d in deg.values())


def _is_path(X: SimplicialComplex) -> bool:
    if X.dim != 1 or not is_connected(X):
        return False
    deg = Counter(v for e in X.facets for v in e)
    return max(deg.values()) <= 2 and sum(1 for d in deg.values() if d == 1) == 2


def classify_surface(X: SimplicialComplex) -> SurfaceType:
    if X.dim == 1:
        return SurfaceType.CIRCLE_1 if _is_circle(X) else SurfaceType.OTHER
    if X.dim != 2:
        raise WrongDimension(f"expected a 1- or 2-complex, got dimension {X.dim}")
    if not is_connected(X):
        return SurfaceType.OTHER
    counts = ridge_counts(X)
    chi = euler_characteristic(X)
    if all(c == 2 for c in counts.values()):
        if chi == 2 and all(_is_circle(link(X, (v,))) for v in X.vertices):
            return SurfaceType.SPHERE_2
        return SurfaceType.OTHER
    if all(c <= 2 for c in counts.values()) and chi == 1:
        bd = boundary_complex(X)
        # a vertex link must be a path (boundary vertex) or a cycle (interior)
        links_ok = all(
            _is_circle(lk) or _is_path(lk)
            for lk in (link(X, (v,)) for v in X.vertices)
        )
        if links_ok and _is_circle(bd):
            return SurfaceType.BALL_2
    return SurfaceType.OTHER


def _rank_gf2(rows) -> int:
    """Rank over GF(2) of a matrix given as integer bitmasks (one per row)."""
    pivots = {}
    rank = 0
    for row in rows:
        while row:
            top = row.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = row
                rank += 1
                break
            row ^= p
    return rank


def boundary_rank_gf2(X: SimplicialComplex, k: int) -> int:
    """Rank of the boundary map from k-chains to (k-1)-chains, mod 2."""
    if k <= 0 or k > X.dim:
        return 0
    index = {f: i for i, f in enumerate(sorted(X.faces(k - 1)))}
    rows = []
    for f in X.faces(k):
        mask = 0
        for r in combinations(f, k):
            mask |= 1 << index[r]
        rows.append(mask)
    return _rank_gf2(rows)


def betti_mod2(X: SimplicialComplex) -> tuple:
    fv = f_vector(X)
    ranks = [boundary_rank_gf2(X, k) for k in range(X.dim + 2)]
    return tuple(fv[k] - ranks[k] - ranks[k + 1] for k in range(X.dim + 1))


def disjoint_union(X: SimplicialComplex, Y: SimplicialComplex) -> SimplicialComplex:
    if set(X.vertices) & set(Y.vertices):
        raise ValueError("complexes share vertices")
    return SimplicialComplex(X.facets | Y.facets)


def interior_faces(X: SimplicialComplex, k: int) -> frozenset:
    """k-faces of X that do not lie on its boundary complex."""
    bd = boundary_complex(X)
    return frozenset(f for f in X.faces(k) if f not in bd)
