"""Polyhedral 3-spheres with many bipyramid facets, built from the cyclic 4-polytope."""

from .balls import A_set, Variant, build_ball, shelling_order
from .complex_core import SimplicialComplex, betti_mod2, build_complex, f_vector
from .cyclic import build_P, enumerate_cyclic_facets, is_gale_facet
from .sphere import BipyramidCell, PolyhedralSphere, build_P_prime, build_Q
from .triangulate import SplitMode, are_isomorphic, canonical_form, count_distinct_classes, realize
from .verify import LemmaId, LemmaReport, run_suite

__version__ = "0.1.0"
