"""Continuous-time Laplacian quantum walks on graphs, with closed-form
corona-product spectra, perfect-state-transfer certification, and
pretty-good-state-transfer time search."""

from .corona import CoronaGraph, common_satellite_order, corona, corona_laplacian_blocks
from .corona_spectrum import (
    ClassA,
    ClassB,
    ClassC,
    CoronaSpectrum,
    corona_eigenprojectors,
    corona_spectrum,
    lambda_pm,
)
from .graphs import (
    FAMILIES,
    Graph,
    adjacency,
    build_named,
    cocktail_party_graph,
    complete_graph,
    component_count,
    cycle_graph,
    degrees,
    empty_graph,
    graph_from_dict,
    graph_to_dict,
    hypercube_graph,
    is_connected,
    laplacian,
    load_graph,
    matching_graph,
    path_graph,
    save_graph,
)
from .numtheory import (
    INTEGRALITY_TOL,
    SquareFreeSplit,
    integer_eigenvalue,
    is_perfect_square,
    rationality_class,
    squarefree_split,
    support_gcd_and_valuation,
)
from .spectral import (
    CospectralityReport,
    SpectralDecomposition,
    SupportInfo,
    eigendecompose,
    eigenvalue_support,
    reconstruct,
    strongly_cospectral,
)
from .statetransfer import (
    IndeterminateVerdictError,
    NoPstWitness,
    PgstHypothesis,
    PgstRecord,
    PgstSearchResult,
    PstConditions,
    TransferVerdict,
    antipodal_sign_check,
    check_pgst_hypothesis,
    check_pst,
    cocktail_pgst,
    corona_no_pst_witness,
    pgst_search,
)
from .walk import (
    WALK_KINDS,
    TransitionElement,
    corona_transition_element,
    corona_transition_values,
    evolve_element,
    evolve_operator,
    fidelity_curve,
    transition_values,
    walk_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "CoronaGraph",
    "common_satellite_order",
    "corona",
    "corona_laplacian_blocks",
    "ClassA",
    "ClassB",
    "ClassC",
    "CoronaSpectrum",
    "corona_eigenprojectors",
    "corona_spectrum",
    "lambda_pm",
    "FAMILIES",
    "Graph",
    "adjacency",
    "build_named",
    "cocktail_party_graph",
    "complete_graph",
    "component_count",
    "cycle_graph",
    "degrees",
    "empty_graph",
    "graph_from_dict",
    "graph_to_dict",
    "hypercube_graph",
    "is_connected",
    "laplacian",
    "load_graph",
    "matching_graph",
    "path_graph",
    "save_graph",
    "INTEGRALITY_TOL",
    "SquareFreeSplit",
    "integer_eigenvalue",
    "is_perfect_square",
    "rationality_class",
    "squarefree_split",
    "support_gcd_and_valuation",
    "CospectralityReport",
    "SpectralDecomposition",
    "SupportInfo",
    "eigendecompose",
    "eigenvalue_support",
    "reconstruct",
    "strongly_cospectral",
    "IndeterminateVerdictError",
    "NoPstWitness",
    "PgstHypothesis",
    "PgstRecord",
    "PgstSearchResult",
    "PstConditions",
    "TransferVerdict",
    "antipodal_sign_check",
    "check_pgst_hypothesis",
    "check_pst",
    "cocktail_pgst",
    "corona_no_pst_witness",
    "pgst_search",
    "WALK_KINDS",
    "TransitionElement",
    "corona_transition_element",
    "corona_transition_values",
    "evolve_element",
    "evolve_operator",
    "fidelity_curve",
    "transition_values",
    "walk_matrix",
    "__version__",
]
