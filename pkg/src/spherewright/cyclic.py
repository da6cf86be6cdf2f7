"""Boundary of the cyclic 4-polytope C(m, 4), described purely by Gale's evenness rule."""

from functools import lru_cache
from itertools import combinations

from .complex_core import SimplicialComplex
from .errors import GroundSetTooSmall, InvalidN


def is_gale_facet(labels, m: int) -> bool:
    """True iff every pair of non-members x < y of [m] has an even number of
    members strictly between them.

    Counts between non-members add up along consecutive gaps, so it is enough
    to test each pair of consecutive non-members.
    """
    members = set(labels)
    if len(members) != 4 or not all(1 <= v <= m for v in members):
        return False
    between = None
    for x in range(1, m + 1):
        if x in members:
            if between is not None:
                between += 1
        else:
            if between is not None and between % 2:
                return False
            between = 0
    return True


def enumerate_cyclic_facets(m: int) -> frozenset:
    if m < 5:
        raise GroundSetTooSmall(f"need m >= 5, got {m}")
    return frozenset(c for c in combinations(range(1, m + 1), 4) if is_gale_facet(c, m))


@lru_cache(maxsize=None)
def build_P(n: int) -> SimplicialComplex:
    """P(n): the boundary complex of C(4n+4, 4) on labels 1..4n+4."""
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    return SimplicialComplex(enumerate_cyclic_facets(4 * n + 4))
