"""
Triangulations of Q(n) obtained by splitting each bipyramid, and exact
isomorphism classification of the results.
"""

import math
import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product

from .complex_core import SimplicialComplex, f_vector, simplex
from .errors import LimitExceeded, MaskLengthMismatch, TooLarge
from .parallel import pmap
from .sphere import BipyramidCell, PolyhedralSphere, build_Q

DEFAULT_MAX_VERTICES = 32


class SplitMode(str, Enum):
    TWO = "TWO"  # insert the equator triangle
    THREE = "THREE"  # insert the apex-apex edge


def split_bipyramid(F: BipyramidCell, mode) -> frozenset:
    mode = SplitMode(mode)
    if mode is SplitMode.TWO:
        return frozenset(simplex((p,) + F.equator) for p in F.apexes)
    return frozenset(simplex(F.apexes + e) for e in combinations(F.equator, 2))


def parse_mask(mask, length=None) -> tuple:
    """Accept a sequence of SplitMode/names or a bit string ('0' = TWO, '1' = THREE)."""
    if isinstance(mask, str):
        bits = []
        for ch in mask:
            if ch not in "01":
                raise ValueError(f"mask characters must be 0 or 1, got {ch!r}")
            bits.append(SplitMode.THREE if ch == "1" else SplitMode.TWO)
    else:
        bits = [SplitMode(b) for b in mask]
    if length is not None and len(bits) != length:
        raise MaskLengthMismatch(f"mask has {len(bits)} entries, expected {length}")
    return tuple(bits)


def mask_to_bits(mask) -> str:
    return "".join("1" if SplitMode(b) is SplitMode.THREE else "0" for b in mask)


def realize(Q: PolyhedralSphere, mask) -> SimplicialComplex:
    """Tetrahedra of Q plus the chosen split of each bipyramid (sites in (a, u) order)."""
    bips = Q.sorted_bipyramids()
    mask = parse_mask(mask, len(bips))
    cells = set(Q.simplex_cells)
    for F, mode in zip(bips, mask):
        cells |= split_bipyramid(F, mode)
    return SimplicialComplex(cells)


def relabel_random(X: SimplicialComplex, rng: random.Random, labels=None) -> SimplicialComplex:
    vs = list(X.vertices)
    target = list(labels) if labels is not None else list(vs)
    rng.shuffle(target)
    return X.relabel(dict(zip(vs, target)))


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """Facets after relabeling vertices to 1..v; ``relabeling`` maps the input
    labels to canonical ones."""

    facets: tuple
    relabeling: tuple = field(compare=False, hash=False)

    @property
    def num_vertices(self) -> int:
        return len(self.relabeling)


def _initial_colors(X: SimplicialComplex, incident) -> dict:
    edge_links = Counter()
    for f in X.facets:
        for e in combinations(f, 2):
            edge_links[e] += 1
    nbrs = defaultdict(set)
    for e in edge_links:
        nbrs[e[0]].add(e[1])
        nbrs[e[1]].add(e[0])
    sig = {}
    for v in X.vertices:
        sizes = tuple(sorted(edge_links[simplex((v, w))] for w in nbrs[v]))
        sig[v] = (len(incident[v]), len(nbrs[v]), sizes)
    return _rank(sig)


def _rank(sig: dict) -> dict:
    order = {s: i for i, s in enumerate(sorted(set(sig.values())))}
    return {v: order[s] for v, s in sig.items()}


def _refine(colors: dict, incident) -> dict:
    ncolors = len(set(colors.values()))
    while True:
        sig = {
            v: (
                c,
                tuple(sorted(tuple(sorted(colors[w] for w in f if w != v)) for f in incident[v])),
            )
            for v, c in colors.items()
        }
        new = _rank(sig)
        k = len(set(new.values()))
        if k == ncolors:
            return new
        colors, ncolors = new, k


def canonical_form(X: SimplicialComplex, max_vertices: int = DEFAULT_MAX_VERTICES) -> CanonicalForm:
    """Relabeling-invariant normal form.

    Search tree: refine the vertex coloring by facet-neighbourhood profiles,
    then individualize each vertex of the first non-singleton colour class in
    turn and recurse. Every discrete leaf gives an ordering of the vertices;
    the form is the lexicographically smallest sorted facet list over all
    leaves. Refinement only prunes the tree, since it never separates
    vertices that some isomorphism could exchange.
    """
    vs = X.vertices
    if len(vs) > max_vertices:
        raise TooLarge(f"{len(vs)} vertices exceeds the bound {max_vertices}")
    incident = defaultdict(list)
    for f in X.facets:
        for v in f:
            incident[v].append(f)
    best = None

    def leaf(colors):
        nonlocal best
        label = {v: c + 1 for v, c in colors.items()}
        cert = tuple(sorted(tuple(sorted(label[v] for v in f)) for f in X.facets))
        if best is None or cert < best[0]:
            best = (cert, label)

    def search(colors):
        colors = _refine(colors, incident)
        cells = defaultdict(list)
        for v, c in colors.items():
            cells[c].append(v)
        if len(cells) == len(colors):
            leaf(colors)
            return
        target = min(c for c, members in cells.items() if len(members) > 1)
        for v in sorted(cells[target]):
            search({w: 2 * c + (0 if w == v else 1) for w, c in colors.items()})

    if vs:
        search(_initial_colors(X, incident))
        cert, label = best
    else:
        cert, label = tuple(sorted(X.facets)), {}
    return CanonicalForm(facets=cert, relabeling=tuple(sorted(label.items())))


def are_isomorphic(X: SimplicialComplex, Y: SimplicialComplex,
                   max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    if len(X.vertices) != len(Y.vertices) or len(X.facets) != len(Y.facets):
        return False
    return canonical_form(X, max_vertices) == canonical_form(Y, max_vertices)


def brute_force_isomorphic(X: SimplicialComplex, Y: SimplicialComplex) -> bool:
    """Exhaustive search over vertex bijections X -> Y.

    Assigns X's vertices one at a time and abandons a partial bijection as
    soon as some fully assigned facet fails to land on a facet of Y. Uses no
    invariants of either complex.
    """
    vx, vy = X.vertices, Y.vertices
    if len(vx) != len(vy) or len(X.facets) != len(Y.facets):
        return False
    pos = {v: i for i, v in enumerate(vx)}
    closing = defaultdict(list)  # facets completed once vertex i is assigned
    for f in X.facets:
        closing[max(pos[v] for v in f)].append(f)
    targets = Y.facets
    image = {}
    used = set()

    def extend(i):
        if i == len(vx):
            return True
        v = vx[i]
        for w in vy:
            if w in used:
                continue
            image[v] = w
            if all(tuple(sorted(image[x] for x in f)) in targets for f in closing[i]):
                used.add(w)
                if extend(i + 1):
                    return True
                used.discard(w)
            del image[v]
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# Counting classes
# ---------------------------------------------------------------------------


@dataclass
class ClassCount:
    n: int
    variant: str
    num_vertices: int
    num_bipyramids: int
    classes: int
    class_sizes: tuple
    # one entry per class: (f-vector, THREE count, masks as bit strings)
    table: list
    lower_bound: int

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "variant": self.variant,
            "vertices": self.num_vertices,
            "bipyramids": self.num_bipyramids,
            "masks": 2 ** self.num_bipyramids,
            "classes": self.classes,
            "class_sizes": list(self.class_sizes),
            "lower_bound": self.lower_bound,
            "table": [
                {"f_vector": list(fv), "three_splits": k, "masks": list(masks)}
                for fv, k, masks in self.table
            ],
        }


def count_distinct_classes(n: int, variant="extended", limit: int = 1 << 16,
                           seed=None, Q: PolyhedralSphere = None) -> ClassCount:
    """Realize every mask and bucket the results by canonical form.

    With ``seed`` set, each realization is randomly relabeled before
    canonicalization; the class count must not change.
    """
    if Q is None:
        Q = build_Q(n, variant, "auto")
    m = len(Q.bipyramid_cells)
    if 2 ** m > limit:
        raise LimitExceeded(f"2^{m} masks exceed limit {limit}")
    masks = list(product((SplitMode.TWO, SplitMode.THREE), repeat=m))
    rngs = [random.Random(f"{seed}:{i}") if seed is not None else None for i in range(len(masks))]

    def work(i):
        X = realize(Q, masks[i])
        if rngs[i] is not None:
            X = relabel_random(X, rngs[i])
        return canonical_form(X), f_vector(X)

    results = pmap(work, range(len(masks)))
    buckets = {}
    for mask, (cf, fv) in zip(masks, results):
        key = cf.facets
        if key not in buckets:
            buckets[key] = (fv, mask.count(SplitMode.THREE), [])
        buckets[key][2].append(mask_to_bits(mask))
    table = sorted(
        ((fv, k, tuple(ms)) for fv, k, ms in buckets.values()),
        key=lambda row: (row[1], row[2]),
    )
    v = len(Q.vertices)
    return ClassCount(
        n=Q.n,
        variant=Q.variant,
        num_vertices=v,
        num_bipyramids=m,
        classes=len(buckets),
        class_sizes=tuple(sorted(len(ms) for _, _, ms in table)),
        table=table,
        lower_bound=math.ceil(2 ** m / math.factorial(v)),
    )
