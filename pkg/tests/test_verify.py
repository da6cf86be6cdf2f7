import pytest

from spherewright.balls import A_set, I_facet, Variant, build_ball, make_certificate, shelling_order
from spherewright.complex_core import SimplicialComplex, boundary_complex, classify_surface, \
    link, SurfaceType
from spherewright.cyclic import build_P
from spherewright.sphere import BipyramidCell, bipyramid_faces, build_P_prime, build_Q
from spherewright.verify import (
    LemmaId,
    Verdict,
    check_ball_intersections,
    check_boundary_classification,
    check_disk_intersections,
    check_interior_edges,
    check_lemma_vertices,
    check_polyhedrality,
    check_shelling,
    check_sphere_3,
    run_suite,
    suite_passes,
    verify_theorem,
)

VARIANTS = list(Variant)


@pytest.mark.parametrize("n", [1, 2, 8])
@pytest.mark.parametrize("variant", VARIANTS)
def test_lemma_vertices(n, variant):
    assert check_lemma_vertices(n, variant).passed


def test_lemma_vertices_sample_intersection():
    common = set(I_facet(4, 2, 1)) & set(I_facet(4, 1, 2))
    assert I_facet(4, 2, 1) == (1, 2, 6, 7)
    assert common == {2, 6, 7} == {4 - 2, 4 + 2, 4 + 2 + 1}


def test_shelling_stated_order():
    assert check_shelling(shelling_order(4, 2, Variant.LITERAL)).passed
    r = check_shelling(shelling_order(4, 1, Variant.EXTENDED))
    assert r.passed
    assert shelling_order(4, 1, Variant.EXTENDED).steps[1] == ((3, 5, 6),)


@pytest.mark.parametrize("second,witness", [
    (I_facet(4, 2, 2), (2,)),
    (I_facet(4, 2, 1), (2, 6)),
])
def test_shelling_scrambled_fails_with_witness(second, witness):
    first = I_facet(4, 1, 1)
    r = check_shelling(make_certificate([first, second], a=4, n=2, variant="literal"))
    assert r.verdict is Verdict.FAIL
    w = r.witnesses[0]
    assert w.faces == (second, witness)
    # recheck: the witness is a maximal common face of dimension < 2
    common = SimplicialComplex([first]).all_faces() & SimplicialComplex([second]).all_faces()
    assert witness in common and all(len(f) <= len(witness) for f in common)


def test_shelling_tampered_certificate_fails():
    cert = shelling_order(4, 2, Variant.LITERAL)
    bad = type(cert)(cert.ordered_facets, cert.steps[:2] + (((1, 2, 3),),) + cert.steps[3:],
                     cert.indices, cert.a, cert.n, cert.variant)
    assert not check_shelling(bad).passed


def test_shelling_closing_step_fails():
    # the fifth facet of the 4-simplex boundary closes a sphere: gluing is the whole boundary
    facets = [(1, 2, 3, 4), (1, 2, 3, 5), (1, 2, 4, 5), (1, 3, 4, 5), (2, 3, 4, 5)]
    r = check_shelling(make_certificate(facets))
    assert not r.passed
    assert "2-ball" in r.witnesses[0].reason


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("variant", VARIANTS)
def test_ball_intersections(n, variant):
    l4, l5 = check_ball_intersections(n, variant)
    assert l4.lemma_id is LemmaId.L4_NO_SHARED_TRIANGLE and l4.passed
    assert l5.lemma_id is LemmaId.L5_BOUNDARY_ONLY and l5.passed


def test_extended_extra_facets_meet_in_boundary_edge():
    B4, B6 = build_ball(4, 2, "extended"), build_ball(6, 2, "extended")
    assert set((3, 4, 5, 6)) & set((5, 6, 7, 8)) == {5, 6}
    common = B4.all_faces() & B6.all_faces()
    assert (5, 6) in common
    assert (5, 6) in boundary_complex(B4).all_faces() and (5, 6) in boundary_complex(B6).all_faces()


def test_boundary_classification_n1():
    r = check_boundary_classification(4, 1, Variant.LITERAL)
    assert r.verdict is Verdict.FAIL
    assert r.metrics == {"computed": 8, "claimed": 6}
    assert set(r.details["computed_minus_claimed"]) == {(3, 5, 6), (3, 4, 6)}
    assert r.details["claimed_minus_computed"] == ()


def test_boundary_classification_interior_claim():
    r = check_boundary_classification(8, 3, Variant.LITERAL)
    assert (6, 10, 11) in r.details["claimed_minus_computed"]
    w = next(w for w in r.witnesses if w.faces[0] == (6, 10, 11))
    assert set(w.faces[1:]) == {I_facet(8, 1, 2), I_facet(8, 2, 1)}
    # recheck: the triangle sits in two facets, so it is not on the boundary
    assert (6, 10, 11) not in boundary_complex(build_ball(8, 3, "literal")).facets


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("variant", VARIANTS)
def test_boundary_counts_and_site_triangles(n, variant):
    for a in A_set(n):
        r = check_boundary_classification(a, n, variant)
        assert r.metrics["computed"] == 4 * n + 4
        assert r.details["site_triangles_not_on_boundary"] == ()


def test_interior_edges_examples():
    r = check_interior_edges(4, 1, Variant.LITERAL)
    assert r.verdict is Verdict.FAIL and r.computed_truth == ()
    w = r.witnesses[0]
    assert w.faces[0] == (3, 6)
    # recheck: link of the edge is a path, not a cycle
    lk = link(build_ball(4, 1, "literal"), (3, 6))
    assert set(w.faces[1:]) == lk.facets
    assert classify_surface(lk) is not SurfaceType.CIRCLE_1

    r = check_interior_edges(4, 1, Variant.EXTENDED)
    assert r.passed and r.computed_truth == ((3, 6),)

    for variant in VARIANTS:
        B = build_ball(6, 2, variant)
        assert link(B, (4, 9)).facets == {(3, 8), (5, 8), (5, 10), (3, 10)}
        assert (4, 9) in check_interior_edges(6, 2, variant).computed_truth


@pytest.mark.parametrize("n", range(1, 9))
def test_interior_edges_ground_truth(n):
    for a in A_set(n):
        lit = check_interior_edges(a, n, "literal")
        ext = check_interior_edges(a, n, "extended")
        assert set(lit.computed_truth) == {(a - u, a + u + 1) for u in range(2, n + 1)}
        assert set(ext.computed_truth) == {(a - u, a + u + 1) for u in range(1, n + 1)}
        assert ext.passed


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("variant", VARIANTS)
def test_disk_intersections(n, variant):
    assert check_disk_intersections(n, variant).passed


def test_disk_pair_n2():
    D41 = SimplicialComplex([(2, 3, 5), (2, 5, 6)])
    D42 = SimplicialComplex([(1, 2, 6), (1, 6, 7)])
    assert D41.all_faces() & D42.all_faces() == {(2,), (6,), (2, 6)}


def test_polyhedrality():
    assert check_polyhedrality(build_Q(1, "extended")).passed
    Q2 = build_Q(2, "extended")
    assert check_polyhedrality(Q2).passed
    F41, F42 = (next(b for b in Q2.bipyramid_cells if b.site == s) for s in [(4, 1), (4, 2)])
    assert bipyramid_faces(F41) & bipyramid_faces(F42) == {(2,), (6,), (13,), (2, 6), (2, 13),
                                                          (6, 13), (2, 6, 13)}


def test_polyhedrality_forced_literal_site_fails():
    Q = build_Q(1, "literal", [(4, 1)], force=True)
    r = check_polyhedrality(Q)
    assert r.verdict is Verdict.FAIL
    pairs = {frozenset(w.faces[:2]): w.faces[2:] for w in r.witnesses}
    top = pairs[frozenset({(3, 5, 6, 9), (2, 3, 5, 6, 9)})]
    # the edge {3,6} survives in the untouched facet {3,4,5,6}, another witness
    assert frozenset({(3, 4, 5, 6), (2, 3, 5, 6, 9)}) in pairs
    # recheck: two maximal common faces, neither spanning the shared vertices
    F = BipyramidCell((3, 6), (9, 2, 5), (4, 1))
    common = bipyramid_faces(F) & SimplicialComplex([(3, 5, 6, 9)]).all_faces()
    assert {f for f in common if len(f) == 3} == {(3, 5, 9), (5, 6, 9)}
    assert set(top) == {(3, 5, 9), (5, 6, 9)}


def test_sphere_checks():
    assert check_sphere_3(build_P(1)).passed
    assert check_sphere_3(build_P_prime(2, "extended")).passed
    assert not check_sphere_3(SimplicialComplex([(1, 2, 3, 4)])).passed


@pytest.mark.parametrize("n,variant,bips", [
    (1, "extended", 1), (3, "extended", 9), (3, "literal", 6), (1, "literal", 0)])
def test_verify_theorem(n, variant, bips):
    r = verify_theorem(n, variant)
    assert r.passed
    assert r.metrics["vertices"] == 5 * n + 4
    assert r.metrics["bipyramids"] == bips


def test_suite_is_deterministic_and_strictness():
    a = run_suite(2, "literal")
    assert a == run_suite(2, "literal")
    assert suite_passes(a)
    assert not suite_passes(a, strict_paper=True)
    failing = {r.lemma_id for r in a if not r.passed}
    assert failing == {LemmaId.L6_BOUNDARY_TRIANGLES, LemmaId.L7_INTERIOR_EDGES}


def test_suite_filter():
    rs = run_suite(2, "extended", ["L2_VERTICES", "L5_BOUNDARY_ONLY"])
    assert [r.lemma_id for r in rs] == [LemmaId.L2_VERTICES, LemmaId.L5_BOUNDARY_ONLY]
