"""Per-vertex energies ``|A|_ii`` by several independent routes.

``spectral``
    diagonal of ``|A| = U diag(|lambda|) U^T``.
``weights``
    ``sum_j u_ij**2 |lambda_j|``; algebraically the same number, assembled
    from the doubly stochastic weight matrix.
``moments``
    for every vertex, recover its per-class spectral weights from exact
    closed-walk counts by solving a square Vandermonde system on the distinct
    eigenvalues; no eigenvectors involved.
``transitive``
    ``E(G) / n``, valid only for vertex-transitive graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import IllConditioned, NotPlausiblyTransitive
from .graph import Graph, adjacency_matrix, is_regular
from .spectral import (
    DEFAULT_CLUSTER_TOL,
    EigenClasses,
    Spectrum,
    cluster_eigenvalues,
    eigendecompose,
    matrix_abs,
    weight_matrix,
)
from .walks import walk_table

__all__ = [
    "METHODS",
    "EnergyReport",
    "MomentSystem",
    "graph_spectrum",
    "moment_system",
    "solve_moment_system",
    "moment_class_weights",
    "vertex_energies",
    "vertex_energies_spectral",
    "vertex_energies_weights",
    "vertex_energies_moments",
    "transitive_energy",
    "graph_energy",
]

METHODS = ("spectral", "weights", "moments", "transitive")

# smallest moment-method weight accepted as rounding noise
NEGATIVE_WEIGHT_FLOOR = -1e-6


@dataclass(frozen=True)
class EnergyReport:
    method: str
    energies: np.ndarray
    total: float
    diagnostics: dict[str, float] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.energies)


@dataclass(frozen=True)
class MomentSystem:
    """Square Vandermonde system ``matrix[k, c] = nodes[c]**k`` for ``k = 0 .. d-1``."""

    nodes: np.ndarray
    matrix: np.ndarray

    @property
    def d(self) -> int:
        return len(self.nodes)


@lru_cache(maxsize=256)
def graph_spectrum(g: Graph) -> Spectrum:
    """Cached eigendecomposition of the adjacency matrix of ``g``."""
    return eigendecompose(adjacency_matrix(g))


def _report(method: str, energies: np.ndarray, diagnostics: dict[str, float]) -> EnergyReport:
    energies = np.asarray(energies, dtype=float)
    energies.flags.writeable = False
    return EnergyReport(method, energies, float(energies.sum()), diagnostics)


def _eigen_diagnostics(g: Graph, s: Spectrum) -> dict[str, float]:
    p = weight_matrix(s)
    return {
        "eigen_residual": s.residual(adjacency_matrix(g)),
        "max_row_sum_deviation": float(
            max(np.abs(p.sum(axis=1) - 1).max(), np.abs(p.sum(axis=0) - 1).max())
        ),
        "most_negative_weight": float(min(p.min(), 0.0)),
    }


def vertex_energies_spectral(g: Graph) -> EnergyReport:
    s = graph_spectrum(g)
    return _report("spectral", np.diag(matrix_abs(s)).copy(), _eigen_diagnostics(g, s))


def vertex_energies_weights(g: Graph) -> EnergyReport:
    s = graph_spectrum(g)
    return _report("weights", weight_matrix(s) @ np.abs(s.values), _eigen_diagnostics(g, s))


def moment_system(nodes: Sequence[float] | EigenClasses) -> MomentSystem:
    if isinstance(nodes, EigenClasses):
        nodes = nodes.representatives
    x = np.array(nodes, dtype=float)
    if np.any(np.diff(x) <= 0):
        raise ValueError("moment-system nodes must be strictly increasing")
    v = np.vander(x, len(x), increasing=True).T
    x.flags.writeable = False
    v.flags.writeable = False
    return MomentSystem(x, v)


def solve_moment_system(ms: MomentSystem, rhs: Sequence[int]) -> np.ndarray:
    """Class weights ``q`` with ``sum_c q_c nodes_c**k = rhs[k]``.

    The solve runs on nodes scaled into ``[-1, 1]`` (moment ``k`` rescaled by
    ``scale**-k``), which tames the growth of the Vandermonde rows; the
    residual is then checked against the unscaled system.
    """
    b = np.array([float(x) for x in rhs])
    if b.shape != (ms.d,):
        raise ValueError(f"expected {ms.d} moments, got {len(b)}")
    scale = float(np.abs(ms.nodes).max()) or 1.0
    k = np.arange(ms.d)
    scaled = np.vander(ms.nodes / scale, ms.d, increasing=True).T
    try:
        # over/underflow here surfaces as a failed residual check below
        with np.errstate(all="ignore"):
            q = np.linalg.solve(scaled, b / scale**k)
    except np.linalg.LinAlgError as exc:
        raise IllConditioned(f"singular moment system: {exc}") from exc

    residual = float(np.abs(ms.matrix @ q - b).max())
    bound = 1e-6 * max(np.abs(b).max(), 1.0)
    if not residual <= bound:
        raise IllConditioned(
            f"moment-system residual {residual:.3e} exceeds {bound:.3e}; "
            "eigenvalue nodes may be too close for the clustering tolerance",
            residual,
        )
    if abs(q.sum() - 1.0) > 1e-8:
        raise IllConditioned(f"class weights sum to {q.sum():.12g}, not 1", residual)
    return q


def moment_class_weights(
    g: Graph, tol: float = DEFAULT_CLUSTER_TOL
) -> tuple[EigenClasses, np.ndarray, float]:
    """Per-vertex class weights (n x d) from closed-walk moments, plus the worst residual."""
    classes = cluster_eigenvalues(graph_spectrum(g), tol)
    ms = moment_system(classes)
    table = walk_table(g, ms.d - 1)
    rows = []
    worst = 0.0
    for v in range(g.n):
        rhs = table.counts[:, v]
        q = solve_moment_system(ms, rhs)
        worst = max(worst, float(np.abs(ms.matrix @ q - rhs).max()))
        rows.append(q)
    return classes, np.array(rows), worst


def vertex_energies_moments(g: Graph, tol: float = DEFAULT_CLUSTER_TOL) -> EnergyReport:
    classes, q, worst = moment_class_weights(g, tol)
    lowest = float(q.min())
    if lowest < NEGATIVE_WEIGHT_FLOOR:
        raise IllConditioned(f"moment-method weight {lowest:.3e} below {NEGATIVE_WEIGHT_FLOOR}")
    diagnostics = {
        "eigen_residual": graph_spectrum(g).residual(adjacency_matrix(g)),
        "max_row_sum_deviation": float(np.abs(q.sum(axis=1) - 1).max()),
        "most_negative_weight": min(lowest, 0.0),
        "moment_residual": worst,
        "classes": float(classes.d),
    }
    return _report("moments", q @ np.abs(classes.nodes), diagnostics)


def graph_energy(g: Graph) -> float:
    return float(np.abs(graph_spectrum(g).values).sum())


def transitive_energy(g: Graph) -> EnergyReport:
    """Spread ``E(G)`` evenly over the vertices.

    Only regularity is checked; the caller vouches for vertex-transitivity.
    """
    if is_regular(g) is None:
        raise NotPlausiblyTransitive("graph is not regular, so it cannot be vertex-transitive")
    s = graph_spectrum(g)
    energies = np.full(g.n, np.abs(s.values).sum() / g.n)
    return _report("transitive", energies, {"eigen_residual": s.residual(adjacency_matrix(g))})


_DISPATCH = {
    "spectral": vertex_energies_spectral,
    "weights": vertex_energies_weights,
    "moments": vertex_energies_moments,
    "transitive": transitive_energy,
}


def vertex_energies(g: Graph, method: str = "spectral") -> EnergyReport:
    try:
        fn = _DISPATCH[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}") from None
    return fn(g)
