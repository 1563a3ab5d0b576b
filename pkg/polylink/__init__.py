"""
Linkedness of combinatorial polytopes.

Polytopes are given by vertex-facet incidences. The package builds them from
joins, sums, pyramids and stackings, extracts their graphs, decides
k-linkedness exactly, links pairs constructively, recognises polytopes with
small facet complements and tabulates the known bounds on k(d).
"""

from __future__ import annotations

from .bounds import (
    bounds_row,
    crosspolytope_family_k,
    crosspolytope_family_pairing,
    crosspolytope_family_witness,
    failing_pairing_pnm,
    k_few_exact,
    k_few_lower_bound,
    k_gamma_upper_bound,
    k_lower_general,
    k_pnm,
    k_table,
    k_upper_bound,
    minimal_linkedness_witness,
    pyramid_stack_pairing,
    pyramid_stack_witness,
)
from .cofacet import (
    characterization_predicates,
    classify_extremal,
    cofacet_graph,
    recognize_canonical,
)
from .data import (
    BoundsRow,
    CanonicalForm,
    Classification,
    ClassificationResult,
    Linkage,
    LinkednessResult,
    Pairing,
    RootedSubdivision,
)
from .exceptions import (
    ExpressionSyntaxError,
    InvalidInputError,
    InvalidPairingError,
    InvalidPolytopeError,
    LinkageAssemblyError,
    PolylinkError,
    PreconditionError,
    SearchTimeoutError,
    StructuralDefectError,
    TheoremViolationError,
)
from .expression import build, evaluate, parse, to_text
from .graph import complement, vertex_connectivity
from .lattice import face_polytope, faces, find_simplex_face, graph_of, validate
from .linkage import disjoint_paths, is_k_linked, linkedness
from .polytope import (
    CombinatorialPolytope,
    bipyramid,
    canonical_polytope,
    cross_polytope,
    direct_sum,
    join,
    pyramid,
    quadrilateral_join,
    simplex,
    stack,
)
from .subdivision import (
    find_rooted_subdivision,
    simplex_face_linkage,
    subdivision_linkage,
)
from .vertexset import VertexSet

__all__ = [
    "BoundsRow",
    "CanonicalForm",
    "Classification",
    "ClassificationResult",
    "CombinatorialPolytope",
    "ExpressionSyntaxError",
    "InvalidInputError",
    "InvalidPairingError",
    "InvalidPolytopeError",
    "Linkage",
    "LinkageAssemblyError",
    "LinkednessResult",
    "Pairing",
    "PolylinkError",
    "PreconditionError",
    "RootedSubdivision",
    "SearchTimeoutError",
    "StructuralDefectError",
    "TheoremViolationError",
    "VertexSet",
    "bipyramid",
    "bounds_row",
    "build",
    "canonical_polytope",
    "characterization_predicates",
    "classify_extremal",
    "cofacet_graph",
    "complement",
    "cross_polytope",
    "crosspolytope_family_k",
    "crosspolytope_family_pairing",
    "crosspolytope_family_witness",
    "direct_sum",
    "disjoint_paths",
    "evaluate",
    "face_polytope",
    "faces",
    "failing_pairing_pnm",
    "find_rooted_subdivision",
    "find_simplex_face",
    "graph_of",
    "is_k_linked",
    "join",
    "k_few_exact",
    "k_few_lower_bound",
    "k_gamma_upper_bound",
    "k_lower_general",
    "k_pnm",
    "k_table",
    "k_upper_bound",
    "linkedness",
    "minimal_linkedness_witness",
    "parse",
    "pyramid",
    "pyramid_stack_pairing",
    "pyramid_stack_witness",
    "quadrilateral_join",
    "recognize_canonical",
    "simplex",
    "simplex_face_linkage",
    "stack",
    "subdivision_linkage",
    "to_text",
    "validate",
    "vertex_connectivity",
]
