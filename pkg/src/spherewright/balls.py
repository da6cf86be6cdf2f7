"""
The 3-balls B(a) inside P(n) and the named faces used to build bipyramids.

For a in A(n) and u in [n] the ball B(a) is the closure of the 3n tetrahedra
I(a, u, i). The EXTENDED variant additionally contains I(a, 0, 2), which is
the fourth tetrahedron of P(n) around E(a, 1); without it E(a, 1) sits on the
boundary of B(a).
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .complex_core import SimplicialComplex, simplex
from .errors import InvalidN, OutOfRange


class Variant(str, Enum):
    LITERAL = "literal"
    EXTENDED = "extended"


def as_variant(value) -> Variant:
    if isinstance(value, Variant):
        return value
    return Variant(str(value).lower())


def A_set(n: int) -> tuple:
    """Even integers in [n+2, 3n+1], ascending."""
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    return tuple(m for m in range(n + 2, 3 * n + 2) if m % 2 == 0)


def apex_label(a: int, n: int) -> int:
    """Label q(a) of the cone vertex added for ball B(a)."""
    return 4 * n + 4 + A_set(n).index(a) + 1


def _check_site(a, u, n, allow_zero=False):
    if n is None:
        return
    if a not in A_set(n):
        raise OutOfRange(f"a={a} not in A({n})")
    lo = 0 if allow_zero else 1
    if not lo <= u <= n:
        raise OutOfRange(f"u={u} outside [{lo},{n}]")


def I_facet(a: int, u: int, i: int, n: int = None) -> tuple:
    if i not in (1, 2, 3):
        raise OutOfRange(f"i={i} not in [3]")
    if u < 0 or (u == 0 and i != 2):
        raise OutOfRange(f"u={u} is only allowed as u=0 with i=2")
    _check_site(a, u, n, allow_zero=True)
    if i == 1:
        vs = (a - u - 1, a - u, a + u, a + u + 1)
    elif i == 2:
        vs = (a - u - 1, a - u, a + u + 1, a + u + 2)
    else:
        vs = (a - u, a - u + 1, a + u + 1, a + u + 2)
    top = 4 * n + 4 if n is not None else None
    if vs[0] < 1 or (top is not None and vs[-1] > top):
        raise OutOfRange(f"I({a},{u},{i}) = {vs} leaves the label range")
    return vs


def I_minus(a, u, i, n=None):
    return I_facet(a, u, i, n)[:2]


def I_plus(a, u, i, n=None):
    return I_facet(a, u, i, n)[2:]


def x_minus(a: int, u: int, i: int) -> int:
    return a - u + 1 if i == 3 else a - u - 1


def x_plus(a: int, u: int, i: int) -> int:
    return a + u if i == 1 else a + u + 2


def E_edge(a: int, u: int) -> tuple:
    return (a - u, a + u + 1)


def R_edge(a: int, u: int) -> tuple:
    return (a - u - 1, a + u)


def T_minus(a: int, u: int) -> tuple:
    return (a - u - 1, a - u, a + u)


def T_plus(a: int, u: int) -> tuple:
    return (a - u - 1, a + u, a + u + 1)


@dataclass(frozen=True)
class SiteFaces:
    a: int
    u: int
    I1: tuple
    I2: tuple
    I3: tuple
    E: tuple
    T_minus: tuple
    T_plus: tuple
    R: tuple
    D: SimplicialComplex = field(compare=False)


def site_faces(a: int, u: int, n: int) -> SiteFaces:
    _check_site(a, u, n)
    tm, tp = T_minus(a, u), T_plus(a, u)
    return SiteFaces(
        a=a,
        u=u,
        I1=I_facet(a, u, 1, n),
        I2=I_facet(a, u, 2, n),
        I3=I_facet(a, u, 3, n),
        E=E_edge(a, u),
        T_minus=tm,
        T_plus=tp,
        R=R_edge(a, u),
        D=SimplicialComplex([tm, tp]),
    )


def label_average(F) -> Fraction:
    if not F:
        raise ValueError("empty simplex has no label average")
    return Fraction(sum(F), len(F))


def ball_facet_indices(n: int, variant) -> list:
    """(u, i) pairs of B(a) in shelling order."""
    order = [((k - 1) // 3 + 1, (k - 1) % 3 + 1) for k in range(1, 3 * n + 1)]
    if as_variant(variant) is Variant.EXTENDED:
        order.insert(0, (0, 2))
    return order


def build_ball(a: int, n: int, variant=Variant.LITERAL) -> SimplicialComplex:
    _check_site(a, 1, n)
    return SimplicialComplex(I_facet(a, u, i, n) for u, i in ball_facet_indices(n, variant))


def claimed_boundary_triangles(a: int, n: int) -> frozenset:
    """The triangles I_s(a,u,i) + x_{-s}(a,u,i) listed as the boundary of B(a)."""
    out = set()
    for u in range(1, n + 1):
        for i in (1, 2, 3):
            out.add(simplex(I_minus(a, u, i, n) + (x_plus(a, u, i),)))
            out.add(simplex(I_plus(a, u, i, n) + (x_minus(a, u, i),)))
    return frozenset(out)


@dataclass(frozen=True)
class ShellingCertificate:
    """Facets in order plus, for each, the triangles it shares with the
    union of the earlier facets (empty for the first)."""

    ordered_facets: tuple
    steps: tuple
    indices: tuple = ()
    a: int = None
    n: int = None
    variant: str = None


def gluing_triangles(prior: list, F: tuple) -> tuple:
    tris = {t for G in prior for t in combinations(G, 3)}
    return tuple(t for t in combinations(F, 3) if t in tris)


def make_certificate(facets, **meta) -> ShellingCertificate:
    facets = [simplex(f) for f in facets]
    steps = tuple(gluing_triangles(facets[:k], F) for k, F in enumerate(facets))
    return ShellingCertificate(tuple(facets), steps, **meta)


def shelling_order(a: int, n: int, variant=Variant.LITERAL) -> ShellingCertificate:
    """F_k = I(a, ceil(k/3), k mod 3), prefixed by I(a,0,2) for EXTENDED."""
    variant = as_variant(variant)
    _check_site(a, 1, n)
    idx = ball_facet_indices(n, variant)
    return make_certificate(
        [I_facet(a, u, i, n) for u, i in idx],
        indices=tuple(idx),
        a=a,
        n=n,
        variant=variant.value,
    )
