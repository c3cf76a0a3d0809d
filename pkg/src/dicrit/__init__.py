"""Dichromatic numbers of oriented graphs: solvers, canonical forms,
isomorph-free enumeration, 3-dicritical constructions, and the census
pipelines that reproduce the small-order results."""

from . import errors, manifest, verify
from .canon import (
    CanonData,
    are_isomorphic,
    automorphisms,
    canonical_data,
    canonical_digraph,
    canonical_form,
    contains_subdigraph,
    decode_code,
    dedupe,
    find_embedding,
)
from .coloring import (
    CycleWitness,
    TwoColoring,
    dichromatic_number,
    is_acyclic,
    is_k_dicritical,
    k_colorable,
    min_degree_prune,
    two_dicolorable,
    two_dicolorable_oracle,
)
from .constructions import (
    SaturationReport,
    butterfly_contract,
    d1,
    d1_general,
    d2,
    d2_general,
    d3,
    gadget_S,
    o_kl,
    saturation_scan,
)
from .digraph import Arc, Digraph, build, build_from_rows
from .formats import (
    emit_d6,
    emit_matrix,
    parse_d6,
    parse_matrix,
    read_digraphs,
    write_digraphs,
)
from .generate import (
    labeled_orientations,
    orientations,
    oriented_graphs,
    tournaments,
    undirected_graphs,
)
from .pipelines import (
    CensusReport,
    CoverResult,
    WitnessedGraph,
    census_7,
    census_8_tournaments,
    cover_census_8,
    covering_set,
    descend_report,
    dicritical_descend,
    min_arcs_9,
    render_cover,
    render_report,
)
from .undirected import UGraph, circulant, complete_graph, ubuild

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "CanonData",
    "CensusReport",
    "CoverResult",
    "CycleWitness",
    "Digraph",
    "SaturationReport",
    "TwoColoring",
    "UGraph",
    "WitnessedGraph",
    "are_isomorphic",
    "automorphisms",
    "build",
    "build_from_rows",
    "butterfly_contract",
    "canonical_data",
    "canonical_digraph",
    "canonical_form",
    "census_7",
    "census_8_tournaments",
    "circulant",
    "complete_graph",
    "contains_subdigraph",
    "cover_census_8",
    "covering_set",
    "d1",
    "d1_general",
    "d2",
    "d2_general",
    "d3",
    "decode_code",
    "dedupe",
    "descend_report",
    "dichromatic_number",
    "dicritical_descend",
    "emit_d6",
    "emit_matrix",
    "errors",
    "find_embedding",
    "gadget_S",
    "is_acyclic",
    "is_k_dicritical",
    "k_colorable",
    "labeled_orientations",
    "manifest",
    "min_arcs_9",
    "min_degree_prune",
    "o_kl",
    "orientations",
    "oriented_graphs",
    "parse_d6",
    "parse_matrix",
    "read_digraphs",
    "render_cover",
    "render_report",
    "saturation_scan",
    "tournaments",
    "two_dicolorable",
    "two_dicolorable_oracle",
    "ubuild",
    "undirected_graphs",
    "verify",
    "write_digraphs",
]
