"""Clique complexes of weakly and strongly separated subsets of [n]:
construction, exact integer homology, and structural verification."""

from .complexes import (
    CollapseOutcome,
    Complex,
    Covering,
    clique_complex,
    clique_complex_of_graph,
    cross_polytope_boundary,
    isomorphic,
    nerve,
    star_intersection,
)
from .homology import (
    HomologyGroup,
    SparseIntMatrix,
    betti_rational,
    boundary_matrices,
    reduced_homology,
    smith_normal_form,
)
from .separation import (
    AntipodalSubcomplex,
    CapExceeded,
    SeparationComplex,
    antipodal_subcomplex,
    build,
    central_edge_star,
    deletion_covering,
    free_complementary_pairs,
    retraction_image,
)
from .subsets import (
    GROUP,
    GroupElement,
    SeparationGraph,
    Subset,
    act,
    is_frozen,
    is_frozen_enumerated,
    nonfrozen_subsets,
    precedes,
    separation_graph,
    strongly_separated,
    subset_str,
    surrounds,
    weakly_separated,
)

__version__ = "0.1.0"
