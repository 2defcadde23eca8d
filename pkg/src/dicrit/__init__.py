"""Exact computations around the dichromatic number of small digraphs:
colorings, criticality certificates, constructions, decomposition, and
exhaustive extremal search."""

from .core import (
    Arc,
    Digraph,
    DigraphError,
    Graph,
    biorient,
    complement,
    complete_graph,
    cycle_graph,
    degrees,
    delete_arc,
    delete_vertex,
    digraph_from_rows,
    induced,
    is_acyclic,
    make_digraph,
    make_graph,
    relabel,
)
from .arclist import ArclistParseError, format_arclist, parse_digraph, read_digraph, write_digraph
from .coloring import (
    Coloring,
    SolveOutcome,
    brute_force_dichromatic,
    chromatic_number,
    dichromatic_number,
    exists_acyclic_k_coloring,
    is_acyclic_coloring,
)
from .criticality import (
    ContradictionError,
    CriticalityCertificate,
    certificate_from_dict,
    certificate_to_dict,
    check_neumann_lara,
    classify_regular_critical,
    is_k_critical,
    verify_certificate,
)
from .constructions import (
    DGParams,
    bidirected_complete,
    bidirected_cycle,
    dg_digraph,
    dg_graph,
    dg_param_choices,
    dirac_join,
    directed_cycle,
    empty_digraph,
    extremal_digraph,
    hajos_join,
)
from .decomposition import (
    DecompositionReport,
    check_theorem10,
    complement_components,
    decompose,
    dominating_vertices,
    is_indecomposable,
    stehlik_check,
)
from .extremal import (
    CanonicalForm,
    ExtremalSearchResult,
    bound_checks,
    canonical_form,
    compute_ext,
    enumerate_critical,
    ext_formula_digraph,
    ext_formula_graph,
    four_critical_edge_count,
    verify_theorem14,
)

__version__ = "0.1.0"
