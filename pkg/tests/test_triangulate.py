import random
from itertools import combinations, product

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spherewright.complex_core import SimplicialComplex, f_vector
from spherewright.errors import LimitExceeded, MaskLengthMismatch, TooLarge
from spherewright.sphere import BipyramidCell, bipyramid_faces, build_Q
from spherewright.triangulate import (
    SplitMode,
    are_isomorphic,
    brute_force_isomorphic,
    canonical_form,
    count_distinct_classes,
    parse_mask,
    realize,
    relabel_random,
    split_bipyramid,
)
from spherewright.verify import check_sphere_3

F41 = BipyramidCell((3, 6), (9, 2, 5), (4, 1))


def incidence_graph(X):
    G = nx.Graph()
    for v in X.vertices:
        G.add_node(("v", v), kind="v")
    for i, f in enumerate(sorted(X.facets)):
        G.add_node(("f", i), kind="f")
        G.add_edges_from((("f", i), ("v", v)) for v in f)
    return G


def nx_isomorphic(X, Y):
    return nx.is_isomorphic(incidence_graph(X), incidence_graph(Y),
                            node_match=lambda a, b: a["kind"] == b["kind"])


@pytest.fixture(scope="module")
def q1_pair():
    Q = build_Q(1, "extended")
    return realize(Q, [SplitMode.TWO]), realize(Q, [SplitMode.THREE])


def test_split_bipyramid():
    assert split_bipyramid(F41, SplitMode.TWO) == {(2, 3, 5, 9), (2, 5, 6, 9)}
    assert split_bipyramid(F41, SplitMode.THREE) == {(2, 3, 6, 9), (2, 3, 5, 6), (3, 5, 6, 9)}


@pytest.mark.parametrize("mode", list(SplitMode))
def test_split_adds_only_missing_faces(mode):
    X = SimplicialComplex(split_bipyramid(F41, mode))
    extra = X.all_faces() - bipyramid_faces(F41) - set(X.facets)
    if mode is SplitMode.TWO:
        assert extra == {(2, 5, 9)}
    else:
        assert extra == {(3, 6), (2, 3, 6), (3, 5, 6), (3, 6, 9)}
        assert all(set(F41.apexes) <= set(t) for t in X.facets)


def test_realize_q1(q1_pair):
    two, three = q1_pair
    assert f_vector(two) == (9, 33, 48, 24)
    assert f_vector(three) == (9, 34, 50, 25)
    assert not are_isomorphic(two, three)


def test_realize_q2_counts():
    Q = build_Q(2, "extended")
    for bits in product("01", repeat=4):
        X = realize(Q, "".join(bits))
        assert f_vector(X)[3] == 64 + bits.count("1")
        assert f_vector(X)[0] == 14


def test_mask_length_mismatch():
    with pytest.raises(MaskLengthMismatch):
        realize(build_Q(2, "extended"), "01")
    with pytest.raises(ValueError):
        parse_mask("0a1")


def test_canonical_form_relabel_invariant(q1_pair):
    X = q1_pair[0]
    ref = canonical_form(X)
    rng = random.Random(7)
    for _ in range(100):
        assert canonical_form(relabel_random(X, rng)) == ref


def test_canonical_relabeling_is_certified(q1_pair):
    X = q1_pair[1]
    cf = canonical_form(X)
    mapping = dict(cf.relabeling)
    assert sorted(mapping.values()) == list(range(1, 10))
    assert tuple(sorted(X.relabel(mapping).facets)) == cf.facets


def test_tetrahedron_boundary_labels():
    A = SimplicialComplex(combinations((3, 6, 9, 12), 3))
    B = SimplicialComplex(combinations((1, 2, 3, 4), 3))
    assert canonical_form(A) == canonical_form(B)


def test_too_large():
    with pytest.raises(TooLarge):
        canonical_form(SimplicialComplex(combinations(range(1, 8), 3)), max_vertices=6)


def test_bruteforce_agreement_q1(q1_pair):
    rng = random.Random(2024)
    pool = list(q1_pair)
    for k in range(20):
        pool.append(relabel_random(q1_pair[k % 2], rng, labels=range(11, 20)))
    for X, Y in combinations(pool, 2):
        assert are_isomorphic(X, Y) == brute_force_isomorphic(X, Y)


small = st.lists(
    st.lists(st.integers(1, 7), min_size=3, max_size=3, unique=True),
    min_size=2, max_size=9,
).map(lambda fs: SimplicialComplex(tuple(f) for f in fs))


@settings(max_examples=150, deadline=None)
@given(small, small, st.randoms(use_true_random=False))
def test_bruteforce_agreement_random(X, Y, rnd):
    assert are_isomorphic(X, Y) == brute_force_isomorphic(X, Y)
    Z = relabel_random(X, rnd)
    assert are_isomorphic(X, Z) and brute_force_isomorphic(X, Z)


def test_same_invariants_non_isomorphic():
    # equal f-vectors and facet-degree sequences, found by random search
    X = SimplicialComplex([(1, 2, 3), (1, 2, 4), (1, 6, 7), (2, 5, 6), (2, 6, 7), (3, 4, 7)])
    Y = SimplicialComplex([(1, 2, 6), (1, 5, 7), (2, 3, 4), (2, 6, 7), (3, 5, 6), (3, 6, 7)])
    assert f_vector(X) == f_vector(Y)
    assert not brute_force_isomorphic(X, Y)
    assert not nx_isomorphic(X, Y)
    assert not are_isomorphic(X, Y)


def test_count_q1():
    res = count_distinct_classes(1, "extended")
    assert res.classes == 2
    assert {fv for fv, _, _ in res.table} == {(9, 33, 48, 24), (9, 34, 50, 25)}
    with pytest.raises(LimitExceeded):
        count_distinct_classes(1, "extended", limit=1)


def test_count_q2_matches_networkx():
    res = count_distinct_classes(2, "extended")
    assert 5 <= res.classes <= 16
    Q = build_Q(2, "extended")
    complexes = [realize(Q, "".join(b)) for b in product("01", repeat=4)]
    # independent count: group by networkx isomorphism within equal f-vectors
    reps = []
    for X in complexes:
        if not any(f_vector(X) == f_vector(R) and nx_isomorphic(X, R) for R in reps):
            reps.append(X)
    assert res.classes == len(reps)


@pytest.mark.parametrize("seed", range(3))
def test_count_q2_stable_under_relabeling(seed):
    assert count_distinct_classes(2, "extended", seed=seed).classes == \
        count_distinct_classes(2, "extended").classes


def test_all_q2_triangulations_are_spheres():
    Q = build_Q(2, "extended")
    for bits in product("01", repeat=4):
        assert check_sphere_3(realize(Q, "".join(bits))).passed
