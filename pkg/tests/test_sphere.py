import pytest

from spherewright.balls import A_set, E_edge, R_edge, Variant, apex_label, build_ball
from spherewright.complex_core import (
    SimplicialComplex,
    betti_mod2,
    boundary_complex,
    is_closed_pseudomanifold_3,
)
from spherewright.cyclic import build_P
from spherewright.errors import ApexCollision, InvalidN, InvalidSite, SiteRejected
from spherewright.sphere import (
    BipyramidCell,
    accepted_sites,
    bipyramid_faces,
    build_P_prime,
    build_Q,
    cone_over_boundary,
)
from spherewright.verify import subdivide


def test_apex_labels():
    assert [apex_label(a, 3) for a in A_set(3)] == [17, 18, 19]


def test_cone_over_boundary():
    bd = boundary_complex(build_ball(4, 1, Variant.EXTENDED))
    cone = cone_over_boundary(9, bd)
    assert len(cone.facets) == 8
    assert {(2, 3, 5, 9), (2, 5, 6, 9)} <= cone.facets
    assert cone_over_boundary(9, SimplicialComplex([(1, 2, 3)])).facets == {(1, 2, 3, 9)}
    with pytest.raises(ApexCollision):
        cone_over_boundary(2, bd)


@pytest.mark.parametrize("n,variant,tets", [
    (1, "extended", 24), (1, "literal", 25), (2, "extended", 64), (2, "literal", 66)])
def test_P_prime_counts(n, variant, tets):
    X = build_P_prime(n, variant)
    assert len(X.vertices) == 5 * n + 4
    assert len(X.facets) == tets
    assert is_closed_pseudomanifold_3(X)
    assert betti_mod2(X) == (1, 0, 0, 1)


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("variant", list(Variant))
def test_P_prime_bookkeeping(n, variant):
    removed = sum(len(build_ball(a, n, variant).facets) for a in A_set(n))
    added = sum(len(boundary_complex(build_ball(a, n, variant)).facets) for a in A_set(n))
    assert len(build_P_prime(n, variant).facets) == len(build_P(n).facets) - removed + added


def test_P_prime_invalid():
    with pytest.raises(InvalidN):
        build_P_prime(0)


def test_Q1_extended():
    Q = build_Q(1, Variant.EXTENDED, "all")
    assert len(Q.vertices) == 9
    assert len(Q.simplex_cells) == 22
    (b,) = Q.bipyramid_cells
    assert b == BipyramidCell((3, 6), (9, 2, 5), (4, 1))


def test_Q2_extended():
    Q = build_Q(2, Variant.EXTENDED, "all")
    assert len(Q.vertices) == 14
    assert len(Q.simplex_cells) == 56
    assert len(Q.bipyramid_cells) == 4


def test_literal_u1_site_rejected():
    with pytest.raises(SiteRejected) as exc:
        build_Q(2, Variant.LITERAL, [(4, 1)])
    assert exc.value.site == (4, 1)
    with pytest.raises(SiteRejected):
        build_Q(2, Variant.LITERAL, "all")


def test_invalid_site():
    with pytest.raises(InvalidSite):
        build_Q(2, Variant.EXTENDED, [(5, 1)])
    with pytest.raises(InvalidSite):
        build_Q(2, Variant.EXTENDED, [(4, 3)])


@pytest.mark.parametrize("n", range(1, 6))
def test_accepted_sites(n):
    assert len(accepted_sites(n, "extended")) == n * n
    assert accepted_sites(n, "literal") == tuple(
        (a, u) for a in A_set(n) for u in range(2, n + 1))


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("variant", list(Variant))
def test_Q_invariants(n, variant):
    Pp = build_P_prime(n, variant)
    Q = build_Q(n, variant, "auto")
    assert len(Q.vertices) == 5 * n + 4
    assert len(Q.simplex_cells) == len(Pp.facets) - 2 * len(Q.bipyramid_cells)
    faces = set()
    for c in Q.simplex_cells:
        faces |= SimplicialComplex([c]).all_faces()
    for b in Q.bipyramid_cells:
        faces |= bipyramid_faces(b)
    for b in Q.bipyramid_cells:
        a, u = b.site
        q = apex_label(a, n)
        assert E_edge(a, u) not in faces
        # R(a, u) survives as an equatorial edge of the bipyramid
        assert R_edge(a, u) in bipyramid_faces(b)
        assert tuple(sorted((q,) + R_edge(a, u))) not in faces
    # the subdivision gives P'(n) back
    assert subdivide(Q) == Pp


def test_empty_site_set_keeps_vertex_count():
    Q = build_Q(3, "extended", [])
    assert len(Q.vertices) == 19 and not Q.bipyramid_cells


def test_bipyramid_faces():
    F = BipyramidCell((3, 6), (9, 2, 5), (4, 1))
    faces = bipyramid_faces(F)
    tris = {f for f in faces if len(f) == 3}
    assert tris == {(2, 3, 9), (2, 3, 5), (3, 5, 9), (2, 6, 9), (2, 5, 6), (5, 6, 9)}
    edges = {f for f in faces if len(f) == 2}
    assert len(edges) == 9 and (3, 6) not in edges
    assert len([f for f in faces if len(f) == 1]) == 5


def test_bipyramid_rejects_degenerate():
    with pytest.raises(ValueError):
        BipyramidCell((3, 3), (9, 2, 5))
    with pytest.raises(ValueError):
        BipyramidCell((3, 6), (3, 2, 5))
