"""Exact Seidel spectra, switching classes, and chain-graph families."""

from .chain import (
    BlockString,
    ChainGraph,
    build_chain_graph,
    chain_graph,
    is_chain_graph,
    parse_block_string,
)
from .families import (
    FAMILY_IDS,
    CospectralPair,
    IntegralFamily,
    ScanHit,
    classify_integral_pair,
    cospectral_pairs_up_to,
    generate_cospectral_pair,
    generate_integral_family,
    integer_sqrt,
    integral_family_params,
    is_perfect_square,
    mirror_chain_family,
    mirror_chain_string,
    scan_seidel_integral,
    unit_chain_spectrum,
    unit_chain_string,
)
from .graphs import Graph, degree_sequence
from .spectra import (
    CharPoly,
    EquiangularParams,
    ExactSpectrum,
    QuotientMatrix,
    RootInterval,
    SeidelMatrix,
    Surd,
    char_poly,
    equiangular_params,
    exact_spectrum,
    is_integral,
    numeric_spectrum,
    quotient_matrix,
    quotient_spectrum,
    seidel_matrix,
    spectrum_from_counts,
)
from .switching import (
    ClassCertificate,
    SearchResult,
    SwitchingWitness,
    biregular_profile,
    canonical_bits,
    canonical_label,
    class_certificate,
    regular_profile,
    search_class_by_degree_profile,
    switch_on_subset,
    switching_equivalent,
)
from .tables import COSPECTRAL_TABLE, INTEGRAL_TABLE, verify_tables

__all__ = [
    "BlockString",
    "COSPECTRAL_TABLE",
    "ChainGraph",
    "CharPoly",
    "ClassCertificate",
    "CospectralPair",
    "EquiangularParams",
    "ExactSpectrum",
    "FAMILY_IDS",
    "Graph",
    "INTEGRAL_TABLE",
    "IntegralFamily",
    "QuotientMatrix",
    "RootInterval",
    "ScanHit",
    "SearchResult",
    "SeidelMatrix",
    "Surd",
    "SwitchingWitness",
    "biregular_profile",
    "build_chain_graph",
    "canonical_bits",
    "canonical_label",
    "chain_graph",
    "char_poly",
    "class_certificate",
    "classify_integral_pair",
    "cospectral_pairs_up_to",
    "degree_sequence",
    "equiangular_params",
    "exact_spectrum",
    "generate_cospectral_pair",
    "generate_integral_family",
    "integer_sqrt",
    "integral_family_params",
    "is_chain_graph",
    "is_integral",
    "is_perfect_square",
    "mirror_chain_family",
    "mirror_chain_string",
    "numeric_spectrum",
    "parse_block_string",
    "quotient_matrix",
    "quotient_spectrum",
    "regular_profile",
    "scan_seidel_integral",
    "search_class_by_degree_profile",
    "seidel_matrix",
    "spectrum_from_counts",
    "switch_on_subset",
    "switching_equivalent",
    "unit_chain_spectrum",
    "unit_chain_string",
    "verify_tables",
]
