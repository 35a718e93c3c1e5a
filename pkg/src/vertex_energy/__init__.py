"""Vertex energies of simple graphs, computed and cross-checked several ways."""

from .catalog import NamedGraphId, generalized_petersen, lcf_graph, named_graph, shrikhande
from .energy import (
    EnergyReport,
    MomentSystem,
    graph_energy,
    moment_system,
    solve_moment_system,
    transitive_energy,
    vertex_energies,
    vertex_energies_moments,
    vertex_energies_spectral,
    vertex_energies_weights,
)
from .graph import Graph, adjacency_matrix, degree, is_regular, new_graph
from .graph6 import parse_graph6, write_graph6
from .spectral import (
    EigenClasses,
    Spectrum,
    class_weights,
    cluster_eigenvalues,
    eigendecompose,
    matrix_abs,
    sqrt_oracle,
    weight_matrix,
)
from .walks import WalkTable, moments_for_vertex, walk_table

__version__ = "0.1.0"
