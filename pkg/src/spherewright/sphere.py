"""
Assembly of P'(n) and of the polyhedral sphere Q(n).

P'(n) replaces the interior of every ball B(a) by the cone from a new vertex
q(a) over its boundary. Q(n) then deletes, for each accepted site (a, u), the
triangle {q(a)} + R(a, u), fusing the two tetrahedra on either side into a
bipyramid with apexes E(a, u).
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .balls import (
    A_set,
    E_edge,
    R_edge,
    T_minus,
    T_plus,
    Variant,
    apex_label,
    as_variant,
    build_ball,
)
from .complex_core import SimplicialComplex, boundary_complex, interior_faces, simplex
from .cyclic import build_P
from .errors import ApexCollision, InvalidN, InvalidSite, SiteRejected


@dataclass(frozen=True, order=True)
class BipyramidCell:
    """Two apexes over a triangular equator.

    ``equator`` keeps the cone vertex q(a) first, followed by R(a, u).
    """

    apexes: tuple
    equator: tuple
    site: tuple = None

    def __post_init__(self):
        if len(self.apexes) != 2 or len(self.equator) != 3:
            raise ValueError("bipyramid needs 2 apexes and 3 equator vertices")
        if set(self.apexes) & set(self.equator) or len(set(self.equator)) != 3 \
                or self.apexes[0] == self.apexes[1]:
            raise ValueError(f"degenerate bipyramid {self.apexes} | {self.equator}")

    @property
    def vertices(self) -> tuple:
        return tuple(sorted(self.apexes + self.equator))


def bipyramid_faces(F: BipyramidCell) -> frozenset:
    """Proper nonempty faces: 5 vertices, 9 edges and 6 triangles."""
    eq_edges = list(combinations(F.equator, 2))
    faces = {(v,) for v in F.vertices}
    faces |= {simplex(e) for e in eq_edges}
    faces |= {simplex((p, v)) for p in F.apexes for v in F.equator}
    faces |= {simplex((p,) + e) for p in F.apexes for e in eq_edges}
    return frozenset(faces)


@dataclass(frozen=True)
class PolyhedralSphere:
    simplex_cells: frozenset
    bipyramid_cells: frozenset
    n: int = None
    variant: str = None
    apexes: tuple = ()  # ((a, q(a)), ...)

    @property
    def sites(self) -> tuple:
        return tuple(sorted(b.site for b in self.bipyramid_cells))

    @property
    def vertices(self) -> tuple:
        vs = {v for c in self.simplex_cells for v in c}
        vs.update(v for b in self.bipyramid_cells for v in b.vertices)
        return tuple(sorted(vs))

    def sorted_bipyramids(self) -> list:
        return sorted(self.bipyramid_cells, key=lambda b: (b.site or (), b.apexes, b.equator))

    def cells(self) -> list:
        """Tetrahedra (as tuples) followed by bipyramids, each group sorted."""
        return sorted(self.simplex_cells) + self.sorted_bipyramids()


def cone_over_boundary(apex: int, S: SimplicialComplex) -> SimplicialComplex:
    if apex in S.vertices:
        raise ApexCollision(f"apex {apex} already a vertex")
    return SimplicialComplex((apex,) + t for t in S.facets)


@lru_cache(maxsize=None)
def _p_prime(n: int, variant: Variant) -> SimplicialComplex:
    P = build_P(n)
    cells = set(P.facets)
    for a in A_set(n):
        B = build_ball(a, n, variant)
        cells -= B.facets
        cells |= cone_over_boundary(apex_label(a, n), boundary_complex(B)).facets
    return SimplicialComplex(cells)


def build_P_prime(n: int, variant=Variant.EXTENDED) -> SimplicialComplex:
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    return _p_prime(n, as_variant(variant))


@lru_cache(maxsize=None)
def interior_edges(a: int, n: int, variant: Variant) -> frozenset:
    return interior_faces(build_ball(a, n, variant), 1)


def accepted_sites(n: int, variant) -> tuple:
    """Sites (a, u) whose edge E(a, u) is interior to B(a)."""
    variant = as_variant(variant)
    return tuple(
        (a, u)
        for a in A_set(n)
        for u in range(1, n + 1)
        if E_edge(a, u) in interior_edges(a, n, variant)
    )


def _resolve_sites(n, variant, sites):
    if sites is None or sites == "auto":
        return accepted_sites(n, variant)
    if sites == "all":
        return tuple((a, u) for a in A_set(n) for u in range(1, n + 1))
    out = []
    A = A_set(n)
    for a, u in sites:
        if a not in A or not 1 <= u <= n:
            raise InvalidSite(f"site ({a},{u}) outside A({n}) x [{n}]")
        out.append((a, u))
    if len(set(out)) != len(out):
        raise InvalidSite("repeated site")
    return tuple(sorted(out))


def build_Q(n: int, variant=Variant.EXTENDED, sites="auto", force=False) -> PolyhedralSphere:
    """Fuse tetrahedron pairs of P'(n) into bipyramids at the given sites.

    ``sites`` is "auto" (every site whose E(a,u) is interior), "all", or an
    explicit iterable of (a, u). ``force`` skips the interior-edge check; it
    exists to build known-bad complexes for the verifier.
    """
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    variant = as_variant(variant)
    chosen = _resolve_sites(n, variant, sites)
    cells = set(build_P_prime(n, variant).facets)
    bipyramids = set()
    for a, u in chosen:
        E = E_edge(a, u)
        if not force and E not in interior_edges(a, n, variant):
            raise SiteRejected(a, u, f"E={E} is not interior to B({a}) ({variant.value})")
        q = apex_label(a, n)
        t1 = simplex((q,) + T_minus(a, u))
        t2 = simplex((q,) + T_plus(a, u))
        missing = [t for t in (t1, t2) if t not in cells]
        if missing:
            raise SiteRejected(a, u, f"tetrahedra {missing} not available")
        T_prime = simplex((q,) + R_edge(a, u))
        if tuple(sorted(set(t1) & set(t2))) != T_prime:
            raise SiteRejected(a, u, "merged tetrahedra do not meet in T'")
        cells -= {t1, t2}
        bipyramids.add(BipyramidCell(apexes=E, equator=(q,) + R_edge(a, u), site=(a, u)))
    return PolyhedralSphere(
        simplex_cells=frozenset(cells),
        bipyramid_cells=frozenset(bipyramids),
        n=n,
        variant=variant.value,
        apexes=tuple((a, apex_label(a, n)) for a in A_set(n)),
    )
