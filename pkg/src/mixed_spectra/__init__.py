"""Gamma-signless Laplacian spectra of mixed graphs, with exact Eisenstein arithmetic."""

from .eisenstein import OMEGA, OMEGA2, Eisenstein, EisensteinRational
from .graph import (
    Graph,
    GraphError,
    MixedGraph,
    Walk,
    degree,
    gamma_weight,
    is_bipartite,
    is_connected,
    is_monostore,
    monostore_gauge,
    random_mixed_graph,
    underlying_graph,
)
from .linegraph import algebraic_line_graph, classic_line_graph
from .matrices import (
    apply_switching,
    build_H_alpha,
    build_H_gamma,
    build_incidence,
    build_Q,
    verify_incidence_factorization,
)
from .report import TheoremReport
from .spectra import (
    Spectrum,
    char_poly_exact,
    eigenvalues,
    is_singular_exact,
    spectral_decomposition,
)
from .theorems import run_all

__all__ = [
    "OMEGA",
    "OMEGA2",
    "Eisenstein",
    "EisensteinRational",
    "Graph",
    "GraphError",
    "MixedGraph",
    "Walk",
    "degree",
    "gamma_weight",
    "is_bipartite",
    "is_connected",
    "is_monostore",
    "monostore_gauge",
    "random_mixed_graph",
    "underlying_graph",
    "algebraic_line_graph",
    "classic_line_graph",
    "apply_switching",
    "build_H_alpha",
    "build_H_gamma",
    "build_incidence",
    "build_Q",
    "verify_incidence_factorization",
    "TheoremReport",
    "Spectrum",
    "char_poly_exact",
    "eigenvalues",
    "is_singular_exact",
    "spectral_decomposition",
    "run_all",
]
