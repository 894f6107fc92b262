"""Distinguishing colorings of connected graphs with maximum degree 3."""

from .canonical import Coloring, audit_propositions, canonical_coloring, kiwi_vertices
from .distinguishing import (
    BudgetExceeded,
    SearchBudget,
    cost2,
    distinguishing_number,
    find_distinguishing_coloring,
)
from .families import FamilySpec, attach_gadget, family, generate_family, named_graph
from .graph import (
    Graph,
    GraphFormatError,
    PreconditionError,
    emit_edge_list,
    emit_graph6,
    girth,
    parse_edge_list,
    parse_graph6,
    smooth_degree2,
    sphere_decomposition,
)
from .prover import (
    ProofTrace,
    color_girth_high,
    fix_all_but_siblings,
    petersen_3coloring,
    prove_two_distinguishable,
)
from .structure import ClassLabel, classify, detect_gadgets, find_k23, prune_sibling_leaves
from .symmetry import (
    automorphisms,
    is_distinguishing,
    is_isomorphic,
    motion,
    transitivity,
    vertex_type,
    vertex_types,
)

__all__ = [
    "attach_gadget",
    "audit_propositions",
    "automorphisms",
    "BudgetExceeded",
    "canonical_coloring",
    "classify",
    "ClassLabel",
    "color_girth_high",
    "Coloring",
    "cost2",
    "detect_gadgets",
    "distinguishing_number",
    "emit_edge_list",
    "emit_graph6",
    "family",
    "FamilySpec",
    "find_distinguishing_coloring",
    "find_k23",
    "fix_all_but_siblings",
    "generate_family",
    "girth",
    "Graph",
    "GraphFormatError",
    "is_distinguishing",
    "is_isomorphic",
    "kiwi_vertices",
    "motion",
    "named_graph",
    "parse_edge_list",
    "parse_graph6",
    "petersen_3coloring",
    "PreconditionError",
    "ProofTrace",
    "prove_two_distinguishable",
    "prune_sibling_leaves",
    "SearchBudget",
    "smooth_degree2",
    "sphere_decomposition",
    "transitivity",
    "vertex_type",
    "vertex_types",
]
