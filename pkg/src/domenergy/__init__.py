"""Exact domination-based graph energies: solvers, spectra, bounds, characterizations."""

from .graphs import (
    Graph,
    VertexSet,
    BlockDecomposition,
    ParseError,
    parse_graph6,
    encode_graph6,
    parse_edge_list,
    path,
    cycle,
    complete,
    star,
    complete_bipartite,
    cocktail_party,
    vertex_classes,
    is_connected,
    is_tree,
    is_unicyclic,
    find_unique_cycle,
    is_regular,
    blocks,
    is_block_graph,
)
from .domination import (
    KIND_CONNECTED,
    KIND_DOMINATING,
    DominationCertificate,
    DominationError,
    enumerate_minimum_sets,
    gamma,
    gamma_c,
    gamma_c_tree_fastpath,
    is_connected_dominating_set,
    is_dominating_set,
    minimum_connected_dominating_set,
    minimum_dominating_set,
)
from .spectral import (
    CharPoly,
    DominationMatrix,
    EnergyReport,
    NonConvergenceError,
    Spectrum,
    build_domination_matrix,
    c_dominating_energy,
    char_poly,
    determinant,
    dominating_energy,
    eigenvalues,
    energy,
    energy_report_for_set,
    energy_spread_over_min_sets,
)
from .bounds import (
    BoundEntry,
    BoundsReport,
    alpha,
    biernacki_lower,
    check_all,
    cor6_lower,
    det_lower,
    diaz_metcalf_lower,
    koolen_moulton_upper,
    lambda1_lower,
    mcclelland_upper,
)
from .characterize import (
    CharacterizationVerdict,
    ScanHit,
    block_graph_condition,
    classify,
    cubic_catalog_check,
    detect_class,
    energies_equal,
    gamma_equality,
    open_problem_scan,
    tree_condition,
    unicyclic_condition_c3,
    unicyclic_condition_c4,
    unicyclic_condition_long_cycle,
)
from .qspr import (
    AlkaneCsvError,
    AlkaneRecord,
    RegressionResult,
    descriptor,
    eq1_band_check,
    fit_and_report,
    load_alkane_csv,
    pearson_r,
)
from .smallgraphs import (
    all_graphs,
    are_isomorphic,
    canonical_code,
    canonical_graph,
    connected_graphs,
    trees,
    unicyclic_graphs,
)

__all__ = [
    # graphs
    "Graph", "VertexSet", "BlockDecomposition", "ParseError",
    "parse_graph6", "encode_graph6", "parse_edge_list",
    "path", "cycle", "complete", "star", "complete_bipartite", "cocktail_party",
    "vertex_classes", "is_connected", "is_tree", "is_unicyclic",
    "find_unique_cycle", "is_regular", "blocks", "is_block_graph",
    # domination
    "KIND_CONNECTED", "KIND_DOMINATING", "DominationCertificate", "DominationError",
    "enumerate_minimum_sets", "gamma", "gamma_c", "gamma_c_tree_fastpath",
    "is_connected_dominating_set", "is_dominating_set",
    "minimum_connected_dominating_set", "minimum_dominating_set",
    # spectral
    "CharPoly", "DominationMatrix", "EnergyReport", "NonConvergenceError", "Spectrum",
    "build_domination_matrix", "c_dominating_energy", "char_poly", "determinant",
    "dominating_energy", "eigenvalues", "energy", "energy_report_for_set",
    "energy_spread_over_min_sets",
    # bounds
    "BoundEntry", "BoundsReport", "alpha", "biernacki_lower", "check_all",
    "cor6_lower", "det_lower", "diaz_metcalf_lower", "koolen_moulton_upper",
    "lambda1_lower", "mcclelland_upper",
    # characterizations
    "CharacterizationVerdict", "ScanHit", "block_graph_condition", "classify",
    "cubic_catalog_check", "detect_class", "energies_equal", "gamma_equality",
    "open_problem_scan", "tree_condition", "unicyclic_condition_c3",
    "unicyclic_condition_c4", "unicyclic_condition_long_cycle",
    # qspr
    "AlkaneCsvError", "AlkaneRecord", "RegressionResult", "descriptor",
    "eq1_band_check", "fit_and_report", "load_alkane_csv", "pearson_r",
    # small graph corpora
    "all_graphs", "are_isomorphic", "canonical_code", "canonical_graph",
    "connected_graphs", "trees", "unicyclic_graphs",
]
