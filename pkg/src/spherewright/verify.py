"""
Extensional checks of the construction.

Each check recomputes its object from facets and compares against the stated
property. Checks never consume each other's conclusions. Failures carry
witnesses: concrete faces that reproduce the violation when handed back to
the complex_core queries.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .balls import (
    A_set,
    E_edge,
    I_facet,
    R_edge,
    ShellingCertificate,
    T_minus,
    T_plus,
    Variant,
    as_variant,
    build_ball,
    claimed_boundary_triangles,
    label_average,
    shelling_order,
)
from .complex_core import (
    SimplicialComplex,
    SurfaceType,
    betti_mod2,
    boundary_complex,
    classify_surface,
    euler_characteristic,
    f_vector,
    is_closed_pseudomanifold_3,
    link,
    simplex,
)
from .cyclic import build_P
from .parallel import pmap
from .sphere import PolyhedralSphere, accepted_sites, bipyramid_faces, build_P_prime, build_Q


class LemmaId(str, Enum):
    L2_VERTICES = "L2_VERTICES"
    L3_SHELLING = "L3_SHELLING"
    L4_NO_SHARED_TRIANGLE = "L4_NO_SHARED_TRIANGLE"
    L5_BOUNDARY_ONLY = "L5_BOUNDARY_ONLY"
    L6_BOUNDARY_TRIANGLES = "L6_BOUNDARY_TRIANGLES"
    L7_INTERIOR_EDGES = "L7_INTERIOR_EDGES"
    L8_DISK_INTERSECTIONS = "L8_DISK_INTERSECTIONS"
    POLYHEDRALITY = "POLYHEDRALITY"
    SPHERE = "SPHERE"
    THEOREM1 = "THEOREM1"


# "Exactly"-style claims whose literal wording is known to disagree with the
# computed truth; they fail a run only in strict mode.
AS_STATED = frozenset({LemmaId.L6_BOUNDARY_TRIANGLES, LemmaId.L7_INTERIOR_EDGES})


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"


@dataclass(frozen=True)
class Witness:
    reason: str
    faces: tuple = ()


@dataclass(frozen=True)
class LemmaReport:
    lemma_id: LemmaId
    parameters: dict
    verdict: Verdict
    witnesses: tuple = ()
    computed_truth: tuple = None
    details: dict = field(default_factory=dict)  # name -> tuple of faces
    metrics: dict = field(default_factory=dict)  # name -> int

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def summary(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        line = f"{self.lemma_id.value:<24} {self.verdict.value}  {params}"
        if self.witnesses:
            w = self.witnesses[0]
            line += f"  [{w.reason}: {list(map(list, w.faces))}]"
        return line


def _report(lemma_id, params, witnesses=(), **kw) -> LemmaReport:
    witnesses = tuple(witnesses)
    verdict = Verdict.FAIL if witnesses else Verdict.PASS
    return LemmaReport(lemma_id, params, verdict, witnesses, **kw)


def _faces_of(facets) -> set:
    return {s for f in facets for k in range(1, len(f) + 1) for s in combinations(f, k)}


def _maximal(faces) -> list:
    faces = sorted(faces, key=len, reverse=True)
    out = []
    for f in faces:
        if not any(set(f) < set(g) for g in out):
            out.append(f)
    return sorted(out)


# ---------------------------------------------------------------------------
# L2
# ---------------------------------------------------------------------------


def _lemma2_bound(a, u, i) -> set:
    if i == 1:
        return {a - u, a + u, a + u + 1}
    if i == 2:
        return {a - u, a + u + 1}
    return {a - u, a - u + 1, a + u + 1}


def check_lemma_vertices(n: int, variant=Variant.LITERAL) -> LemmaReport:
    """I(a,u,i) & I(a,u',j) lies in the i-indexed 3-set whenever u' < u.

    Under EXTENDED the extra facet enters as u' = 0, j = 2.
    """
    variant = as_variant(variant)
    low = [(0, 2)] if variant is Variant.EXTENDED else []
    witnesses = []
    checked = 0
    for a in A_set(n):
        for u in range(1, n + 1):
            smaller = low + [(up, j) for up in range(1, u) for j in (1, 2, 3)]
            for i in (1, 2, 3):
                F = I_facet(a, u, i, n)
                bound = _lemma2_bound(a, u, i)
                for up, j in smaller:
                    G = I_facet(a, up, j, n)
                    common = set(F) & set(G)
                    checked += 1
                    if not common <= bound:
                        witnesses.append(Witness(f"I({a},{u},{i}) & I({a},{up},{j})",
                                                 (F, G, simplex(common))))
    return _report(LemmaId.L2_VERTICES, {"n": n, "variant": variant.value}, witnesses,
                   metrics={"pairs_checked": checked})


# ---------------------------------------------------------------------------
# L3
# ---------------------------------------------------------------------------


def check_shelling(cert: ShellingCertificate) -> LemmaReport:
    """Recompute every step of a shelling and confirm the final complex is a ball."""
    params = {"a": cert.a, "n": cert.n, "variant": cert.variant,
              "facets": len(cert.ordered_facets)}
    facets = [tuple(f) for f in cert.ordered_facets]
    witnesses = []
    if len(set(facets)) != len(facets):
        dup = sorted({f for f in facets if facets.count(f) > 1})
        return _report(LemmaId.L3_SHELLING, params, [Witness("repeated facet", tuple(dup))])
    if len(cert.steps) != len(facets):
        witnesses.append(Witness("certificate has wrong number of steps"))
    for k, F in enumerate(facets):
        if k == 0:
            continue
        prior = facets[:k]
        common = _faces_of([F]) & _faces_of(prior)
        if not common:
            witnesses.append(Witness(f"step {k + 1} meets nothing", (F,)))
            break
        low = [m for m in _maximal(common) if len(m) < 3]
        if low:
            witnesses.append(Witness(f"step {k + 1} meets prior union in a non-2-dimensional face",
                                     (F, *low)))
            break
        tris = sorted(m for m in common if len(m) == 3)
        if len(tris) > 3 or classify_surface(SimplicialComplex(tris)) is not SurfaceType.BALL_2:
            witnesses.append(Witness(f"step {k + 1} gluing is not a 2-ball", (F, *tris)))
            break
        interior = [t for t in tris if sum(1 for G in prior if set(t) <= set(G)) != 1]
        if interior:
            witnesses.append(Witness(f"step {k + 1} glues along a non-boundary triangle",
                                     (F, *interior)))
            break
        if len(cert.steps) == len(facets) and sorted(map(tuple, cert.steps[k])) != tris:
            witnesses.append(Witness(f"step {k + 1} recorded gluing differs from recomputed",
                                     tuple(tris)))
            break
    metrics = {}
    if not witnesses:
        B = SimplicialComplex(facets)
        bd = boundary_complex(B)
        betti = betti_mod2(B)
        metrics = {"boundary_triangles": len(bd.facets)}
        if classify_surface(bd) is not SurfaceType.SPHERE_2:
            witnesses.append(Witness("boundary of final complex is not a 2-sphere",
                                     tuple(sorted(bd.facets))))
        if betti != (1, 0, 0, 0):
            witnesses.append(Witness(f"final complex has mod-2 Betti numbers {betti}"))
    return _report(LemmaId.L3_SHELLING, params, witnesses, metrics=metrics)


# ---------------------------------------------------------------------------
# L4 / L5
# ---------------------------------------------------------------------------


def check_ball_intersections(n: int, variant=Variant.LITERAL) -> tuple:
    """Pairwise ball intersections: (no shared triangle report, boundary-only report)."""
    variant = as_variant(variant)
    params = {"n": n, "variant": variant.value}
    A = A_set(n)
    B = {a: build_ball(a, n, variant) for a in A}
    bd_faces = {a: boundary_complex(B[a]).all_faces() for a in A}
    shared_tris, not_boundary = [], []
    for a, b in combinations(A, 2):
        common = B[a].all_faces() & B[b].all_faces()
        for f in sorted(common):
            if len(f) >= 3:
                shared_tris.append(Witness(f"B({a}) and B({b}) share a 2-face", (f,)))
            if f not in bd_faces[a] or f not in bd_faces[b]:
                where = a if f not in bd_faces[a] else b
                not_boundary.append(Witness(f"common face of B({a}), B({b}) interior to B({where})",
                                            (f,)))
    return (
        _report(LemmaId.L4_NO_SHARED_TRIANGLE, params, shared_tris),
        _report(LemmaId.L5_BOUNDARY_ONLY, params, not_boundary),
    )


# ---------------------------------------------------------------------------
# L6 / L7
# ---------------------------------------------------------------------------


def check_boundary_classification(a: int, n: int, variant=Variant.LITERAL) -> LemmaReport:
    variant = as_variant(variant)
    B = build_ball(a, n, variant)
    computed = frozenset(boundary_complex(B).facets)
    claimed = claimed_boundary_triangles(a, n)
    extra = sorted(computed - claimed)
    missing = sorted(claimed - computed)
    witnesses = [Witness("boundary triangle not in the stated family", (t,)) for t in extra]
    for t in missing:
        holders = tuple(sorted(G for G in B.facets if set(t) <= set(G)))
        witnesses.append(Witness("stated boundary triangle is interior", (t,) + holders))
    site_tris = [t for u in range(1, n + 1) for t in (T_minus(a, u), T_plus(a, u))
                 if t not in computed]
    return _report(
        LemmaId.L6_BOUNDARY_TRIANGLES,
        {"a": a, "n": n, "variant": variant.value},
        witnesses,
        computed_truth=tuple(sorted(computed)),
        details={
            "computed_minus_claimed": tuple(extra),
            "claimed_minus_computed": tuple(missing),
            "site_triangles_not_on_boundary": tuple(site_tris),
        },
        metrics={"computed": len(computed), "claimed": len(claimed)},
    )


def expected_edge_link(a: int, u: int) -> frozenset:
    cyc = (a - u - 1, a + u, a - u + 1, a + u + 2)
    return frozenset(simplex((cyc[k], cyc[(k + 1) % 4])) for k in range(4))


def check_interior_edges(a: int, n: int, variant=Variant.LITERAL) -> LemmaReport:
    variant = as_variant(variant)
    B = build_ball(a, n, variant)
    bd = boundary_complex(B)
    computed = frozenset(e for e in B.faces(1) if e not in bd)
    claimed = frozenset(E_edge(a, u) for u in range(1, n + 1))
    witnesses = []
    for e in sorted(claimed - computed):
        lk = link(B, e)
        witnesses.append(Witness("stated interior edge lies on the boundary; link follows",
                                 (e,) + tuple(sorted(lk.facets))))
    for e in sorted(computed - claimed):
        witnesses.append(Witness("interior edge outside the stated family", (e,)))
    for u in range(1, n + 1):
        e = E_edge(a, u)
        if e in computed:
            lk = frozenset(link(B, e).facets)
            if lk != expected_edge_link(a, u):
                witnesses.append(Witness(f"link of E({a},{u}) is not the expected 4-cycle",
                                         (e,) + tuple(sorted(lk))))
    return _report(
        LemmaId.L7_INTERIOR_EDGES,
        {"a": a, "n": n, "variant": variant.value},
        witnesses,
        computed_truth=tuple(sorted(computed)),
        details={
            "computed_minus_claimed": tuple(sorted(computed - claimed)),
            "claimed_minus_computed": tuple(sorted(claimed - computed)),
        },
        metrics={"computed": len(computed), "claimed": len(claimed)},
    )


# ---------------------------------------------------------------------------
# L8
# ---------------------------------------------------------------------------


def _disk(a, u) -> SimplicialComplex:
    return SimplicialComplex([T_minus(a, u), T_plus(a, u)])


def check_disk_intersections(n: int, variant=Variant.LITERAL) -> LemmaReport:
    """Distinct disks D(a,u) meet in at most one face (empty, vertex or edge)."""
    variant = as_variant(variant)
    sites = [(a, u) for a in A_set(n) for u in range(1, n + 1)]
    disks = {s: _disk(*s) for s in sites}
    faces = {s: D.all_faces() for s, D in disks.items()}
    bd = {s: boundary_complex(D).all_faces() for s, D in disks.items()}
    witnesses = []
    for s in sites:
        a, u = s
        D = disks[s]
        verts = D.vertices
        non_edges = {e for e in combinations(verts, 2) if e not in D.faces(1)}
        if non_edges != {E_edge(a, u)}:
            witnesses.append(Witness(f"missing edges of D{s} are not exactly E{s}",
                                     tuple(sorted(non_edges))))
        if {e for e in D.faces(1) if e not in bd[s]} != {R_edge(a, u)}:
            witnesses.append(Witness(f"R{s} is not the unique interior edge of D{s}",
                                     (R_edge(a, u),)))
    for s, t in combinations(sites, 2):
        common = faces[s] & faces[t]
        top = _maximal(common)
        if len(top) > 1 or any(len(m) > 2 for m in top):
            witnesses.append(Witness(f"D{s} and D{t} do not meet in a single vertex or edge",
                                     tuple(top)))
            continue
        if s[0] == t[0]:
            off = [f for f in common if f not in bd[s] or f not in bd[t]]
            if off:
                witnesses.append(Witness(f"D{s} and D{t} meet off their boundaries",
                                         tuple(sorted(off))))
        else:
            if E_edge(*s) == E_edge(*t) or label_average(E_edge(*s)) == label_average(E_edge(*t)):
                witnesses.append(Witness(f"E{s} coincides in label average with E{t}",
                                         (E_edge(*s), E_edge(*t))))
    return _report(LemmaId.L8_DISK_INTERSECTIONS, {"n": n, "variant": variant.value}, witnesses,
                   metrics={"pairs_checked": len(sites) * (len(sites) - 1) // 2})


# ---------------------------------------------------------------------------
# Polyhedrality and spheres
# ---------------------------------------------------------------------------


def _cell_faces(cell) -> frozenset:
    if isinstance(cell, tuple):
        return frozenset(_faces_of([cell]))
    return bipyramid_faces(cell) | {cell.vertices}


def _cell_vertices(cell) -> tuple:
    return cell if isinstance(cell, tuple) else cell.vertices


def check_polyhedrality(Q: PolyhedralSphere) -> LemmaReport:
    """Any two cells share a unique maximal common face M, and their common
    vertices are exactly the vertices of M."""
    cells = Q.cells()
    faces = [_cell_faces(c) for c in cells]
    verts = [set(_cell_vertices(c)) for c in cells]
    by_vertex = {}
    for idx, vs in enumerate(verts):
        for v in vs:
            by_vertex.setdefault(v, []).append(idx)
    pairs = sorted({(i, j) for ids in by_vertex.values() for i, j in combinations(ids, 2)})
    witnesses = []
    for i, j in pairs:
        common = faces[i] & faces[j]
        top = _maximal(common)
        shared = verts[i] & verts[j]
        if len(top) != 1 or set(top[0]) != shared:
            witnesses.append(Witness(
                "cells meet in more than a single face",
                (_cell_vertices(cells[i]), _cell_vertices(cells[j]), *top),
            ))
    params = {"n": Q.n, "variant": Q.variant, "bipyramids": len(Q.bipyramid_cells)}
    return _report(LemmaId.POLYHEDRALITY, params, witnesses,
                   metrics={"cells": len(cells), "pairs_checked": len(pairs)})


def subdivide(Q: PolyhedralSphere) -> SimplicialComplex:
    """Split every bipyramid along its equator triangle."""
    cells = set(Q.simplex_cells)
    for b in Q.bipyramid_cells:
        cells |= {simplex((p,) + b.equator) for p in b.apexes}
    return SimplicialComplex(cells)


def check_sphere_3(X, label: str = None) -> LemmaReport:
    if isinstance(X, PolyhedralSphere):
        params = {"n": X.n, "variant": X.variant, "object": label or "Q"}
        X = subdivide(X)
    else:
        params = {"object": label or "complex"}
    witnesses = []
    if not is_closed_pseudomanifold_3(X):
        witnesses.append(Witness("not a closed 3-pseudomanifold"))
    if X.dim == 3:
        for v in X.vertices:
            if classify_surface(link(X, (v,))) is not SurfaceType.SPHERE_2:
                witnesses.append(Witness("vertex link is not a 2-sphere", ((v,),)))
    chi = euler_characteristic(X)
    betti = betti_mod2(X)
    if chi != 0:
        witnesses.append(Witness(f"Euler characteristic {chi}"))
    if betti != (1, 0, 0, 1):
        witnesses.append(Witness(f"mod-2 Betti numbers {betti}"))
    fv = f_vector(X)
    metrics = {f"f{k}": c for k, c in enumerate(fv)}
    metrics["euler"] = chi
    return _report(LemmaId.SPHERE, params, witnesses, metrics=metrics)


def verify_theorem(n: int, variant=Variant.EXTENDED) -> LemmaReport:
    variant = as_variant(variant)
    Q = build_Q(n, variant, "auto")
    v = len(Q.vertices)
    m = len(Q.bipyramid_cells)
    expected = n * n if variant is Variant.EXTENDED else len(accepted_sites(n, variant))
    witnesses = []
    if v != 5 * n + 4:
        witnesses.append(Witness(f"{v} vertices, expected {5 * n + 4}"))
    if m != expected:
        witnesses.append(Witness(f"{m} bipyramids, expected {expected}"))
    poly = check_polyhedrality(Q)
    if not poly.passed:
        witnesses.append(Witness("polyhedrality fails", poly.witnesses[0].faces))
    sph = check_sphere_3(Q)
    if not sph.passed:
        witnesses.append(Witness("sphere check fails: " + sph.witnesses[0].reason))
    return _report(
        LemmaId.THEOREM1,
        {"n": n, "variant": variant.value},
        witnesses,
        metrics={"vertices": v, "bipyramids": m, "tetrahedra": len(Q.simplex_cells),
                 "expected_bipyramids": expected},
    )


# ---------------------------------------------------------------------------
# Suite
# ---------------------------------------------------------------------------


def run_suite(n: int, variant=Variant.EXTENDED, lemmas=None) -> list:
    """Every check for one (n, variant), ordered by lemma then parameters."""
    variant = as_variant(variant)
    wanted = {LemmaId(x) for x in lemmas} if lemmas else set(LemmaId)
    A = A_set(n)
    jobs = []
    if LemmaId.L2_VERTICES in wanted:
        jobs.append(lambda: [check_lemma_vertices(n, variant)])
    if LemmaId.L3_SHELLING in wanted:
        jobs.extend((lambda a=a: [check_shelling(shelling_order(a, n, variant))]) for a in A)
    if wanted & {LemmaId.L4_NO_SHARED_TRIANGLE, LemmaId.L5_BOUNDARY_ONLY}:
        jobs.append(lambda: [r for r in check_ball_intersections(n, variant)
                             if r.lemma_id in wanted])
    if LemmaId.L6_BOUNDARY_TRIANGLES in wanted:
        jobs.extend((lambda a=a: [check_boundary_classification(a, n, variant)]) for a in A)
    if LemmaId.L7_INTERIOR_EDGES in wanted:
        jobs.extend((lambda a=a: [check_interior_edges(a, n, variant)]) for a in A)
    if LemmaId.L8_DISK_INTERSECTIONS in wanted:
        jobs.append(lambda: [check_disk_intersections(n, variant)])
    if LemmaId.POLYHEDRALITY in wanted:
        jobs.append(lambda: [check_polyhedrality(build_Q(n, variant, "auto"))])
    if LemmaId.SPHERE in wanted:
        jobs.append(lambda: [
            check_sphere_3(build_P(n), "P"),
            check_sphere_3(build_P_prime(n, variant), "P_prime"),
            check_sphere_3(build_Q(n, variant, "auto"), "Q"),
        ])
    if LemmaId.THEOREM1 in wanted:
        jobs.append(lambda: [verify_theorem(n, variant)])
    return [r for batch in pmap(lambda job: job(), jobs) for r in batch]


def suite_passes(reports, strict_paper=False) -> bool:
    return all(r.passed or (not strict_paper and r.lemma_id in AS_STATED) for r in reports)
