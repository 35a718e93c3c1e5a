"""Cross-method consistency checks, as run by ``vertex-energy verify``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .energy import (
    graph_energy,
    graph_spectrum,
    moment_class_weights,
    transitive_energy,
    vertex_energies_moments,
    vertex_energies_spectral,
    vertex_energies_weights,
)
from .graph import Graph, adjacency_matrix
from .spectral import EPS, class_weights, cluster_eigenvalues, matrix_abs, sqrt_oracle, weight_matrix
from .walks import walk_table

__all__ = ["CheckResult", "run_checks", "WALK_KMAX"]

WALK_KMAX = 11


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{self.name}: {self.detail} {'pass' if self.passed else 'FAIL'}"


def _check(name: str, value: float, bound: float, detail: str) -> CheckResult:
    return CheckResult(name, bool(value <= bound), f"{detail} (max deviation {value:.3e}, bound {bound:.1e})")


def run_checks(g: Graph, tol: float, transitive: bool = False) -> list[CheckResult]:
    """Evaluate every invariant on ``g``; ``transitive`` adds the equal-energy check."""
    a = adjacency_matrix(g)
    s = graph_spectrum(g)
    n = g.n
    results = []

    scale = max(float(np.abs(a).max()), 1.0)
    results.append(_check("eigen residual", s.residual(a), 64 * n * EPS * scale, "|AU - U diag(lambda)|"))
    results.append(_check("eigen orthogonality", s.orthogonality_error(), 64 * n * EPS, "|U^T U - I|"))

    p = weight_matrix(s)
    dev = max(np.abs(p.sum(axis=0) - 1).max(), np.abs(p.sum(axis=1) - 1).max())
    results.append(_check("doubly stochastic", dev, tol, "row and column sums of P equal 1"))

    spectral = vertex_energies_spectral(g)
    weights = vertex_energies_weights(g)
    moments = vertex_energies_moments(g)
    total = graph_energy(g)
    results.append(
        _check(
            "conservation",
            abs(spectral.energies.sum() - total),
            tol,
            f"Σ energies = {spectral.energies.sum():.6f} = Σ|λ|",
        )
    )

    pairs = [(spectral, weights), (spectral, moments), (weights, moments)]
    worst = max(float(np.abs(x.energies - y.energies).max()) for x, y in pairs)
    results.append(_check("method agreement", worst, tol, "spectral / weights / moments per vertex"))

    m = (a @ a.T).astype(float)
    diff = float(np.abs(matrix_abs(s) - sqrt_oracle(m)).max())
    results.append(_check("matrix abs vs sqrt oracle", diff, tol, "|A| against sqrt(A A^T)"))

    classes = cluster_eigenvalues(s)
    q = class_weights(p, classes)
    table = walk_table(g, WALK_KMAX)
    rel = 0.0
    for k in range(WALK_KMAX + 1):
        predicted = q @ classes.nodes**k
        actual = table.counts[k].astype(float)
        rel = max(rel, float((np.abs(predicted - actual) / np.maximum(np.abs(actual), 1.0)).max()))
    results.append(_check("walk moments", rel, tol, f"Σ_c q_vc λ_c^k = closed walks, k ≤ {WALK_KMAX} (relative)"))

    _, mq, _ = moment_class_weights(g)
    outside = max(0.0, -float(mq.min()), float(mq.max()) - 1.0)
    results.append(_check("moment weights in [0, 1]", outside, tol, "class weights from walk counts"))

    if transitive:
        spread = float(np.ptp(spectral.energies))
        common = float(transitive_energy(g).energies[0])
        gap = max(spread, float(np.abs(spectral.energies - common).max()))
        results.append(_check("transitive", gap, tol, f"every vertex energy = E(G)/n = {common:.6f}"))
    return results
