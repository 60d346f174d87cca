"""Spectra of graphs assembled from copies of a rooted graph.

Attaching one copy of a rooted graph to every vertex of a connected base
graph turns the eigenproblem of the weighted degree/adjacency combination
matrix into one small corner-shifted problem per base eigenvalue; for
level-regular rooted trees those collapse further to symmetric tridiagonal
blocks with closed-form multiplicities. The package computes these spectra,
verifies them against an independent dense solver, and checks the derived
spectral-radius bounds for unicyclic graphs.
"""
from ._backend import BACKEND
from .aalpha import AlphaParam, adjacency_matrix, build_a_alpha, degree_vector, signless_laplacian
from .bounds import (
    BoundReport,
    alpha_threshold,
    bound_comparison_matrix,
    cosine_reference_matrix,
    cosine_reference_radius,
    spectral_radius_bound,
    threshold_matrix_height2,
    threshold_matrix_height3,
    threshold_root_height2,
    threshold_root_height3,
    unicyclic_height,
    verify_bound,
)
from .errors import NumericalError, ValidationError
from .graphs import (
    GeneralizedBetheTreeSpec,
    Graph,
    RootedGraph,
    UnicyclicDecomposition,
    build_bethe_tree,
    build_cycle,
    build_generalized_bethe_tree,
    complete_graph,
    compose,
    decompose_unicyclic,
    parse_bethe_spec,
    parse_graph,
    path_graph,
    random_connected_graph,
    random_rooted_graph,
    random_unicyclic,
    root_last,
    serialize_bethe_spec,
    serialize_graph,
    unicyclic_corpus,
)
from .spectral import (
    DEFAULT_COMPARE_TOL,
    DEFAULT_MERGE_TOL,
    DEFAULT_SOLVE_TOL,
    SpectrumComparison,
    SpectrumMultiset,
    SymTridiagonal,
    WeylReport,
    charpoly_value,
    compare_spectra,
    dense_eigenvalues,
    merge_spectrum,
    spectrum_from_eigenvalues,
    sturm_count,
    tridiag_eigenvalues,
    weyl_check,
)
from .structured import (
    CharPolySequence,
    CornerBlock,
    LevelBlock,
    StructuredSpectrumReport,
    base_eigenvalues,
    composition_spectrum,
    corner_shifted_tridiagonal,
    cycle_structured_spectrum,
    structured_spectrum,
    tree_tridiagonal,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    "AlphaParam",
    "adjacency_matrix",
    "build_a_alpha",
    "degree_vector",
    "signless_laplacian",
    "BoundReport",
    "alpha_threshold",
    "bound_comparison_matrix",
    "cosine_reference_matrix",
    "cosine_reference_radius",
    "spectral_radius_bound",
    "threshold_matrix_height2",
    "threshold_matrix_height3",
    "threshold_root_height2",
    "threshold_root_height3",
    "unicyclic_height",
    "verify_bound",
    "NumericalError",
    "ValidationError",
    "GeneralizedBetheTreeSpec",
    "Graph",
    "RootedGraph",
    "UnicyclicDecomposition",
    "build_bethe_tree",
    "build_cycle",
    "build_generalized_bethe_tree",
    "complete_graph",
    "compose",
    "decompose_unicyclic",
    "parse_bethe_spec",
    "parse_graph",
    "path_graph",
    "root_last",
    "serialize_bethe_spec",
    "serialize_graph",
    "random_connected_graph",
    "random_rooted_graph",
    "random_unicyclic",
    "unicyclic_corpus",
    "DEFAULT_COMPARE_TOL",
    "DEFAULT_MERGE_TOL",
    "DEFAULT_SOLVE_TOL",
    "SpectrumComparison",
    "SpectrumMultiset",
    "SymTridiagonal",
    "WeylReport",
    "charpoly_value",
    "compare_spectra",
    "dense_eigenvalues",
    "merge_spectrum",
    "spectrum_from_eigenvalues",
    "sturm_count",
    "tridiag_eigenvalues",
    "weyl_check",
    "CharPolySequence",
    "CornerBlock",
    "LevelBlock",
    "StructuredSpectrumReport",
    "base_eigenvalues",
    "composition_spectrum",
    "corner_shifted_tridiagonal",
    "cycle_structured_spectrum",
    "structured_spectrum",
    "tree_tridiagonal",
]
