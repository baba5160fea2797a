"""Cech complexes of finite graphs: homology, persistence, collapsibility."""

from ._cechcube import (
    Barcode,
    BarcodeInterval,
    ChainVerdict,
    CollapseSearchResult,
    CollapseSequence,
    CollapseStep,
    CollapsibilityBounds,
    DimensionHomology,
    DomainError,
    Filtration,
    FiltrationEntry,
    Graph,
    HomologySummary,
    ReplayReport,
    SimplicialComplex,
    SizeError,
    TableEntry,
    alpha,
    betti,
    betti1_hypercube,
    betti2_hypercube,
    betti_mod2_all,
    birth_scale,
    build_filtration,
    cech_complex,
    collapsibility_bounds,
    compute_barcode,
    contiguity_chain,
    deletion,
    full_simplex_scale,
    is_d_collapsible,
    link,
    reduced_homology,
    skeleton,
    star,
    table_lookup,
    table_registry,
    verify_sequence,
)

__all__ = [
    "Barcode",
    "BarcodeInterval",
    "ChainVerdict",
    "CollapseSearchResult",
    "CollapseSequence",
    "CollapseStep",
    "CollapsibilityBounds",
    "DimensionHomology",
    "DomainError",
    "Filtration",
    "FiltrationEntry",
    "Graph",
    "HomologySummary",
    "ReplayReport",
    "SimplicialComplex",
    "SizeError",
    "TableEntry",
    "alpha",
    "betti",
    "betti1_hypercube",
    "betti2_hypercube",
    "betti_mod2_all",
    "birth_scale",
    "build_filtration",
    "cech_complex",
    "collapsibility_bounds",
    "compute_barcode",
    "contiguity_chain",
    "deletion",
    "full_simplex_scale",
    "is_d_collapsible",
    "link",
    "reduced_homology",
    "skeleton",
    "star",
    "table_lookup",
    "table_registry",
    "verify_sequence",
]
