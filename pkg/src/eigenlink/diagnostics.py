"""Checks of the constant-eigenvector assumption behind spectral forecasting.

Three instruments: per-dimension eigenvector similarity over time, the
all-pairs stability matrix between an early and the final snapshot, and a
diagonality test that conjugates the adjacency growth into the early
eigenbasis.  Growth that is well explained by eigenvalue evolution alone
leaves the off-diagonal of that conjugation near zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .spectral import (
    SpectralDecomposition,
    cosine_similarity,
    decompose,
    reconstruction_residual,
)
from .trajectory import select_top_fraction
from .validation import as_symmetric_matrix

BASIS_MATCH_TOL = 1e-6
DEFAULT_PASS_THRESHOLD = 0.9


@dataclass(frozen=True, eq=False)
class DiagonalityReport:
    """Growth conjugated into the early eigenbasis, with its diagonal-energy ratio."""

    delta: np.ndarray
    score: float


def eigenvector_evolution(
    decomps: Sequence[SpectralDecomposition],
    reference: SpectralDecomposition,
    dims: Sequence[int],
) -> dict[int, np.ndarray]:
    """Absolute cosine similarity of each dimension against the reference.

    series[j][i] compares column j of the i-th decomposition with column j of
    the reference; the absolute value absorbs the sign ambiguity of
    eigenvectors.
    """
    for d in decomps:
        if d.dimension != reference.dimension:
            raise ValueError("all decompositions must share the reference dimension")
    series: dict[int, np.ndarray] = {}
    for j in dims:
        if not 0 <= j < reference.dimension:
            raise IndexError(f"dimension index {j} out of range")
        ref = reference.eigenvector(j)
        series[j] = np.array(
            [abs(cosine_similarity(d.eigenvector(j), ref)) for d in decomps]
        )
    return series


def stability_matrix(d1: SpectralDecomposition, dt: SpectralDecomposition) -> np.ndarray:
    """Entry (i, j) is |x_i(t1) . x_j(t)|; permutation structure flags rank swaps."""
    if d1.dimension != dt.dimension:
        raise ValueError("decompositions must have equal dimension")
    return np.abs(d1.vectors.T @ dt.vectors)


def diagonality_test(d1: SpectralDecomposition, a1, a2) -> DiagonalityReport:
    """Conjugate the growth a2 - a1 into d1's eigenbasis and score its diagonality.

    The score is the fraction of squared mass on the diagonal of
    X1.T (A2 - A1) X1, defined as 1 for zero growth.  d1 must decompose a1.
    """
    a1 = as_symmetric_matrix(a1, "a1")
    a2 = as_symmetric_matrix(a2, "a2")
    if not (a1.shape[0] == a2.shape[0] == d1.dimension):
        raise ValueError("matrix dimensions must agree with the decomposition")
    if reconstruction_residual(a1, d1) > BASIS_MATCH_TOL:
        raise ValueError("d1 does not decompose a1 (reconstruction residual too large)")
    delta = d1.vectors.T @ (a2 - a1) @ d1.vectors
    total = float(np.sum(delta * delta))
    if total == 0.0:
        return DiagonalityReport(delta=delta, score=1.0)
    diagonal = float(np.sum(np.diag(delta) ** 2))
    return DiagonalityReport(delta=delta, score=diagonal / total)


@dataclass(frozen=True, eq=False)
class AssumptionReport:
    """Combined verdict of the eigenvector-constancy checks on a sequence."""

    dims: list[int]
    evolution: dict[int, np.ndarray]
    evolution_min: float
    stability: np.ndarray
    diagonality: DiagonalityReport
    earlier_step: int
    threshold: float

    @property
    def passed(self) -> bool:
        return (
            self.diagonality.score >= self.threshold
            and self.evolution_min >= self.threshold
        )

    def verdict_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"spectral-evolution-assumption: {status} "
            f"(score={self.diagonality.score:.4f}, evolution={self.evolution_min:.4f})"
        )


def verify_assumptions(
    snapshots,
    fraction: float = 0.08,
    earlier_position: float = 0.75,
    threshold: float = DEFAULT_PASS_THRESHOLD,
) -> AssumptionReport:
    """Run all three diagnostics on a snapshot sequence.

    Decomposes every snapshot (one O(n^3) solve per step), tracks the top
    ``fraction`` of dimensions against the final basis, and compares the
    snapshot at the ``earlier_position`` quantile of steps with the final one
    for stability and diagonality.  The verdict requires both the diagonality
    score and the worst top-dimension similarity to reach ``threshold``.
    """
    mats = [np.asarray(m, dtype=float) for m in getattr(snapshots, "matrices", snapshots)]
    t = len(mats)
    if t < 2:
        raise ValueError("assumption checks need at least 2 snapshots")
    decomps = [decompose(a) for a in mats]
    reference = decomps[-1]
    dims = select_top_fraction(reference, fraction)
    evolution = eigenvector_evolution(decomps, reference, dims)
    evolution_min = min(float(np.min(s)) for s in evolution.values())
    earlier = max(1, min(math.ceil(earlier_position * t), t - 1))
    stability = stability_matrix(decomps[earlier - 1], reference)
    diag = diagonality_test(decomps[earlier - 1], mats[earlier - 1], mats[-1])
    return AssumptionReport(
        dims=dims,
        evolution=evolution,
        evolution_min=evolution_min,
        stability=stability,
        diagonality=diag,
        earlier_step=earlier,
        threshold=threshold,
    )
