"""Symmetric eigendecomposition, Rayleigh quotients and spectral reconstruction.

Eigenvalues are kept sorted by descending absolute value throughout the
package; "dimension j" always means the j-th column/value under that order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .validation import as_symmetric_matrix, as_vector

ZERO_TOL = 1e-12
RECONSTRUCTION_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Orthogonal eigenvector matrix (columns) with matching eigenvalues.

    ``values`` is sorted by descending ``|value|`` and every column of
    ``vectors`` is sign-fixed so that its first entry larger than 1e-12 in
    magnitude is nonnegative.  Both arrays are read-only.
    """

    vectors: np.ndarray
    values: np.ndarray

    @property
    def dimension(self) -> int:
        return int(self.values.shape[0])

    @property
    def spectral_radius(self) -> float:
        return float(np.abs(self.values[0])) if self.dimension else 0.0

    def eigenvector(self, j: int) -> np.ndarray:
        return self.vectors[:, j]


def _canonical_signs(vectors: np.ndarray) -> np.ndarray:
    for j in range(vectors.shape[1]):
        col = vectors[:, j]
        significant = np.nonzero(np.abs(col) > ZERO_TOL)[0]
        if significant.size and col[significant[0]] < 0:
            vectors[:, j] = -col
    return vectors


def decompose(a) -> SpectralDecomposition:
    """Eigendecompose a symmetric matrix.

    The sort order (descending absolute eigenvalue, positive first on ties)
    and the sign canonicalization make the result deterministic for identical
    input.
    """
    a = as_symmetric_matrix(a, "a")
    try:
        values, vectors = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise np.linalg.LinAlgError(
            f"eigendecomposition did not converge for a {a.shape[0]}x{a.shape[0]} matrix: {exc}"
        ) from exc
    # Descending |value|; ties broken by descending signed value, then stable.
    order = np.lexsort((-values, -np.abs(values)))
    values = np.ascontiguousarray(values[order])
    vectors = _canonical_signs(np.ascontiguousarray(vectors[:, order]))
    values.setflags(write=False)
    vectors.setflags(write=False)
    return SpectralDecomposition(vectors=vectors, values=values)


def rayleigh_quotient(a, x) -> float:
    """Return x.T A x / x.T x for a symmetric matrix and a nonzero vector."""
    a = as_symmetric_matrix(a, "a")
    x = as_vector(x, a.shape[0], "x")
    sq = float(x @ x)
    if sq <= ZERO_TOL * ZERO_TOL:
        raise ValueError("x is numerically zero (norm <= 1e-12)")
    return float(x @ (a @ x)) / sq


def rayleigh_quotients(a, vectors: np.ndarray) -> np.ndarray:
    """Rayleigh quotients of several column vectors against one matrix.

    Vectorized variant used for trajectory computation; columns must be
    nonzero.
    """
    a = as_symmetric_matrix(a, "a")
    v = np.asarray(vectors, dtype=float)
    if v.ndim != 2 or v.shape[0] != a.shape[0]:
        raise ValueError(f"vectors must be {a.shape[0]}-row columns, got shape {v.shape}")
    sq = np.einsum("ij,ij->j", v, v)
    if np.any(sq <= ZERO_TOL * ZERO_TOL):
        raise ValueError("vectors contains a numerically zero column")
    return np.einsum("ij,ij->j", v, a @ v) / sq


def reconstruct(vectors, values) -> np.ndarray:
    """Build X diag(values) X.T, symmetrized to remove rounding asymmetry."""
    x = np.asarray(vectors, dtype=float)
    lam = as_vector(values, name="values")
    if x.ndim != 2 or x.shape[1] != lam.shape[0]:
        raise ValueError(
            f"eigenvector matrix {x.shape} does not match {lam.shape[0]} eigenvalues"
        )
    m = (x * lam) @ x.T
    return (m + m.T) / 2.0


def reconstruction_residual(a, d: SpectralDecomposition) -> float:
    """Max-norm residual of A - X diag(lam) X.T, relative to max(1, max|A|)."""
    a = as_symmetric_matrix(a, "a")
    scale = max(1.0, float(np.max(np.abs(a))))
    return float(np.max(np.abs(a - reconstruct(d.vectors, d.values)))) / scale


def cosine_similarity(x, y) -> float:
    """Cosine of the angle between two nonzero vectors, clipped to [-1, 1]."""
    x = as_vector(x, name="x")
    y = as_vector(y, x.shape[0], "y")
    nx = float(np.linalg.norm(x))
    ny = float(np.linalg.norm(y))
    if nx <= ZERO_TOL or ny <= ZERO_TOL:
        raise ValueError("cosine similarity is undefined for zero vectors")
    return float(np.clip(x @ y / (nx * ny), -1.0, 1.0))
