"""Dense symmetric eigendecomposition and the quantities derived from it.

The eigensolver is a cyclic Jacobi iteration: slow for large matrices but
unconditionally convergent on symmetric input, deterministic, and accurate to
working precision in both eigenvalues and orthogonality of the vectors. The
graphs handled here have at most a few dozen vertices.

:func:`sqrt_oracle` is deliberately independent of the eigensolver. It is used
to cross-check :func:`matrix_abs`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import AmbiguousClustering, ConvergenceFailure, DimensionMismatch

__all__ = [
    "Spectrum",
    "EigenClasses",
    "eigendecompose",
    "cluster_eigenvalues",
    "weight_matrix",
    "class_weights",
    "matrix_abs",
    "sqrt_oracle",
    "DEFAULT_CLUSTER_TOL",
    "MAX_SWEEPS",
]

EPS = np.finfo(float).eps
MAX_SWEEPS = 30
DEFAULT_CLUSTER_TOL = 1e-6


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues; column ``j`` of ``vectors`` is the unit eigenvector for ``values[j]``."""

    values: np.ndarray
    vectors: np.ndarray
    sweeps: int = 0

    @property
    def n(self) -> int:
        return len(self.values)

    def residual(self, a: np.ndarray) -> float:
        """``max |A U - U diag(values)|``."""
        if self.n == 0:
            return 0.0
        return float(np.abs(a @ self.vectors - self.vectors * self.values).max())

    def orthogonality_error(self) -> float:
        return float(np.abs(self.vectors.T @ self.vectors - np.eye(self.n)).max())


@dataclass(frozen=True)
class EigenClasses:
    """Numerically distinct eigenvalues.

    ``members[c]`` lists the (0-based) spectrum indices whose eigenvalues were
    merged into class ``c``; ``representatives[c]`` is their mean.
    """

    representatives: tuple[float, ...]
    members: tuple[tuple[int, ...], ...]
    tol: float

    @property
    def d(self) -> int:
        return len(self.representatives)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(len(m) for m in self.members)

    @property
    def nodes(self) -> np.ndarray:
        return np.array(self.representatives, dtype=float)


def _frozen(x: np.ndarray) -> np.ndarray:
    x.flags.writeable = False
    return x


def eigendecompose(a: np.ndarray, max_sweeps: int = MAX_SWEEPS) -> Spectrum:
    """Cyclic-by-row Jacobi eigendecomposition of a real symmetric matrix.

    Each eigenvector is sign-normalized so that its largest-magnitude entry
    (first one on ties) is positive, which makes the output fully deterministic.
    """
    w = np.array(a, dtype=float)
    n = w.shape[0]
    if w.shape != (n, n):
        raise DimensionMismatch(f"expected a square matrix, got shape {w.shape}")
    if not np.array_equal(w, w.T):
        raise DimensionMismatch("matrix is not symmetric")
    v = np.eye(n)
    scale = np.abs(w).max() if n else 0.0
    # off-diagonal mass at rounding level of the largest entry
    target = max(n, 1) * EPS * scale

    sweeps = 0
    while True:
        off = np.linalg.norm(w - np.diag(np.diag(w)))
        if off <= target:
            break
        if sweeps == max_sweeps:
            raise ConvergenceFailure(
                f"Jacobi did not converge in {max_sweeps} sweeps (off-diagonal norm {off:.3e})"
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = w[p, q]
                if apq == 0.0:
                    continue
                tau = (w[q, q] - w[p, p]) / (2.0 * apq)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                wp, wq = w[:, p].copy(), w[:, q].copy()
                w[:, p] = c * wp - s * wq
                w[:, q] = s * wp + c * wq
                wp, wq = w[p, :].copy(), w[q, :].copy()
                w[p, :] = c * wp - s * wq
                w[q, :] = s * wp + c * wq
                w[p, q] = w[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq

    values = np.diag(w).copy()
    order = np.argsort(values, kind="stable")
    values = values[order]
    v = v[:, order]
    for j in range(n):
        col = v[:, j]
        if col[np.argmax(np.abs(col))] < 0:
            v[:, j] = -col
    return Spectrum(_frozen(values), _frozen(v), sweeps)


def cluster_eigenvalues(s: Spectrum, tol: float = DEFAULT_CLUSTER_TOL) -> EigenClasses:
    """Group sorted eigenvalues; a new class starts where the gap to the previous value exceeds ``tol``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    vals = s.values
    groups: list[list[int]] = []
    for j in range(len(vals)):
        if groups and vals[j] - vals[j - 1] <= tol:
            groups[-1].append(j)
        else:
            groups.append([j])

    reps = [float(np.mean(vals[g])) for g in groups]
    spreads = [float(vals[g[-1]] - vals[g[0]]) for g in groups]
    gaps = [float(vals[groups[c + 1][0]] - vals[groups[c][-1]]) for c in range(len(groups) - 1)]
    for c, spread in enumerate(spreads):
        if spread <= tol / 2:
            continue
        neighbours = [gaps[i] for i in (c - 1, c) if 0 <= i < len(gaps)]
        if any(g < 2 * tol for g in neighbours):
            raise AmbiguousClustering(
                f"class near {reps[c]:.12g} spreads {spread:.3e} next to a gap "
                f"of {min(neighbours):.3e}; tolerance {tol:g} does not separate the spectrum"
            )
    return EigenClasses(tuple(reps), tuple(tuple(g) for g in groups), tol)


def weight_matrix(s: Spectrum) -> np.ndarray:
    """Squared eigenvector components ``p_ij = u_ij**2`` (doubly stochastic)."""
    return _frozen(s.vectors**2)


def class_weights(p: np.ndarray, classes: EigenClasses) -> np.ndarray:
    """Collapse the columns of ``p`` onto eigenvalue classes (n x d)."""
    n_cols = sum(classes.multiplicities)
    if p.ndim != 2 or p.shape[1] != n_cols:
        raise DimensionMismatch(
            f"weight matrix has shape {p.shape}, classes cover {n_cols} eigenvalues"
        )
    q = np.column_stack([p[:, list(m)].sum(axis=1) for m in classes.members])
    return _frozen(q)


def matrix_abs(s: Spectrum) -> np.ndarray:
    """``|A| = U diag(|lambda|) U^T``."""
    u = s.vectors
    r = (u * np.abs(s.values)) @ u.T
    return _frozen((r + r.T) / 2)


def _denman_beavers(b: np.ndarray, tol: float, max_iter: int) -> np.ndarray:
    """Square root of a symmetric positive definite matrix, scaled product-form iteration."""
    r = b.shape[0]
    y = b.copy()
    z = np.eye(r)
    scaling = True
    prev = np.inf
    for _ in range(max_iter):
        if scaling:
            _, ly = np.linalg.slogdet(y)
            _, lz = np.linalg.slogdet(z)
            mu = np.exp(-(ly + lz) / (2 * r))
        else:
            mu = 1.0
        y_next = 0.5 * (mu * y + np.linalg.inv(mu * z))
        z_next = 0.5 * (mu * z + np.linalg.inv(mu * y))
        change = np.abs(y_next - y).max() / max(np.abs(y_next).max(), 1e-300)
        y, z = y_next, z_next
        if change < 1e-2:
            scaling = False
        # quadratic convergence stalls at rounding level rather than reaching tol exactly
        if change <= tol or (change < 1e-10 and change > prev / 4):
            return y
        prev = change
    raise ConvergenceFailure(f"Denman-Beavers did not converge in {max_iter} iterations")


def sqrt_oracle(m: np.ndarray, max_iter: int = 100) -> np.ndarray:
    """Principal square root of a symmetric positive semidefinite matrix.

    The range of ``m`` is found by column-pivoted QR, ``m`` is compressed onto
    it (where it is positive definite) and the compressed matrix is rooted with
    a scaled Denman-Beavers iteration. The null space is mapped to zero exactly,
    which keeps singular inputs (adjacency matrices with eigenvalue 0) accurate.
    """
    m = np.array(m, dtype=float)
    n = m.shape[0]
    if m.shape != (n, n):
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if not np.allclose(m, m.T, rtol=0, atol=1e-12 * max(1.0, np.abs(m).max(initial=0.0))):
        raise ValueError("matrix is not symmetric")
    m = (m + m.T) / 2
    norm = np.abs(m).max(initial=0.0)
    if norm == 0.0:
        return np.zeros((n, n))

    q, r_fac, _ = scipy.linalg.qr(m, pivoting=True)
    diag = np.abs(np.diag(r_fac))
    rank = int(np.count_nonzero(diag > 1e-10 * diag[0]))
    basis = q[:, :rank]
    b = basis.T @ m @ basis
    b = (b + b.T) / 2
    try:
        np.linalg.cholesky(b)
    except np.linalg.LinAlgError as exc:
        raise ValueError("matrix is not positive semidefinite") from exc

    root = basis @ _denman_beavers(b, tol=1e-14, max_iter=max_iter) @ basis.T
    root = (root + root.T) / 2
    err = np.abs(root @ root - m).max()
    if err > 1e-8 * max(1.0, norm):
        raise ConvergenceFailure(f"square-root residual {err:.3e} above bound")
    return root
