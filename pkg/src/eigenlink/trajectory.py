"""Eigenvalue trajectories across snapshots and next-step spectrum forecasts.

A trajectory tracks one latent dimension j: the Rayleigh quotient of the
final snapshot's eigenvector x_j against every earlier snapshot.  Because
x_j is fixed, the last entry is the true eigenvalue and the sequence is
immune to the rank swaps that plague per-snapshot decompositions.  Forecasts
extend a trajectory one step, either by two-point linear extrapolation,
by least-squares regression, or by applying a graph kernel to the final
spectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .kernels import SpectralTransform, parse_transform_spec, resolve_alpha, transform_values
from .spectral import SpectralDecomposition, decompose, rayleigh_quotient, rayleigh_quotients, reconstruct
from .validation import as_symmetric_matrix, check_fraction

TWO_POINT = "two_point_extrapolation"
LINEAR_REGRESSION = "linear_regression"
QUADRATIC_REGRESSION = "quadratic_regression"

_METHOD_ALIASES = {
    "extrapolate": TWO_POINT,
    "two_point": TWO_POINT,
    TWO_POINT: TWO_POINT,
    "linreg": LINEAR_REGRESSION,
    LINEAR_REGRESSION: LINEAR_REGRESSION,
    "quadreg": QUADRATIC_REGRESSION,
    QUADRATIC_REGRESSION: QUADRATIC_REGRESSION,
}

KEEP_CURRENT = "keep_current"
ZERO = "zero"


@dataclass(frozen=True, eq=False)
class EigenvalueTrajectory:
    """Per-dimension sequence of eigenvalue approximations, one per snapshot."""

    dimension: int
    values: np.ndarray

    @property
    def step_count(self) -> int:
        return int(self.values.shape[0])


@dataclass(frozen=True)
class SpectrumForecast:
    """Predicted next-step eigenvalue per selected latent dimension."""

    values: dict[int, float]
    method: str
    fraction: float

    def dimensions(self) -> list[int]:
        return sorted(self.values)


def resolve_method(spec: str) -> tuple[str, SpectralTransform | None]:
    """Map a method spec string onto (canonical name, optional kernel)."""
    name = spec.strip().lower()
    if name in _METHOD_ALIASES:
        return _METHOD_ALIASES[name], None
    transform = parse_transform_spec(name)
    return f"kernel({transform.spec_string()})", transform


def _snapshot_matrices(snapshots) -> list[np.ndarray]:
    mats = getattr(snapshots, "matrices", snapshots)
    return [np.asarray(m, dtype=float) for m in mats]


def _check_selection(selection: Sequence[int], n: int) -> list[int]:
    dims = [int(j) for j in selection]
    for j in dims:
        if not 0 <= j < n:
            raise IndexError(f"dimension index {j} out of range 0..{n - 1}")
    return dims


def approximate_trajectories(
    snapshots, d: SpectralDecomposition, selection: Sequence[int] | None = None
) -> list[EigenvalueTrajectory]:
    """Rayleigh-quotient trajectories of the final eigenvectors.

    ``d`` must decompose the last snapshot; trajectory j at step i is
    R(A_i, x_j), so its last value equals the true eigenvalue of dimension j.
    """
    mats = _snapshot_matrices(snapshots)
    dims = _check_selection(selection if selection is not None else range(d.dimension), d.dimension)
    cols = d.vectors[:, dims]
    rows = [rayleigh_quotients(a, cols) for a in mats]
    table = np.asarray(rows)
    return [
        EigenvalueTrajectory(dimension=j, values=table[:, k])
        for k, j in enumerate(dims)
    ]


def exact_trajectories(
    snapshots, selection: Sequence[int] | None = None
) -> list[EigenvalueTrajectory]:
    """Trajectories from a full decomposition of every snapshot.

    Dimension j here means the j-th eigenvalue by descending absolute value
    at each step; rank swaps between steps show up as jumps.  Costs one
    eigendecomposition per snapshot.
    """
    mats = _snapshot_matrices(snapshots)
    n = mats[-1].shape[0]
    dims = _check_selection(selection if selection is not None else range(n), n)
    spectra = np.asarray([decompose(a).values for a in mats])
    return [EigenvalueTrajectory(dimension=j, values=spectra[:, j]) for j in dims]


def two_point_estimate(a1, d2: SpectralDecomposition, j: int) -> float:
    """Back-estimate dimension j's eigenvalue at an earlier time.

    Diagonalizes the earlier matrix with the later eigenvector: the Rayleigh
    quotient of a1 at (X_2)_j.
    """
    a1 = as_symmetric_matrix(a1, "a1")
    if a1.shape[0] != d2.dimension:
        raise ValueError(
            f"matrix dimension {a1.shape[0]} does not match decomposition {d2.dimension}"
        )
    if not 0 <= j < d2.dimension:
        raise IndexError(f"dimension index {j} out of range 0..{d2.dimension - 1}")
    return rayleigh_quotient(a1, d2.eigenvector(j))


def linear_extrapolate(lambda2: float, lambda1_hat: float) -> float:
    """Next eigenvalue by linear continuation: 2*lambda2 - lambda1_hat."""
    return 2.0 * lambda2 - lambda1_hat


def fit_trajectory(tr: EigenvalueTrajectory, model: str = "linear") -> float:
    """Least-squares fit of a trajectory over steps 1..t, evaluated at t+1."""
    degree = {"linear": 1, "quadratic": 2}.get(model)
    if degree is None:
        raise ValueError(f"unknown regression model {model!r}")
    t = tr.step_count
    if t < degree + 1:
        raise ValueError(f"{model} regression needs at least {degree + 1} points, got {t}")
    steps = np.arange(1, t + 1, dtype=float)
    coeffs = np.polyfit(steps, tr.values, degree)
    return float(np.polyval(coeffs, t + 1))


def select_top_fraction(d: SpectralDecomposition, fraction: float) -> list[int]:
    """Indices of the ceil(fraction * n) dimensions of largest |eigenvalue|."""
    check_fraction(fraction)
    k = math.ceil(fraction * d.dimension)
    order = np.argsort(-np.abs(d.values), kind="stable")
    return sorted(int(j) for j in order[:k])


def default_earlier_step(step_count: int) -> int:
    """Two-point back-reference: the snapshot at the 75% position (1-based)."""
    return max(1, min(math.ceil(0.75 * step_count), step_count - 1))


def forecast_spectrum(
    snapshots,
    d: SpectralDecomposition,
    method: str,
    fraction: float = 1.0,
    earlier_step: int | None = None,
    trajectory_mode: str = "rayleigh",
) -> SpectrumForecast:
    """Predict the next spectrum for the top ``fraction`` of dimensions.

    ``method`` is a spec string: ``extrapolate``, ``linreg``, ``quadreg`` or a
    kernel spec (``triangle``, ``exp:<alpha|auto>``, ``neumann:<alpha|auto>``).
    ``trajectory_mode`` selects Rayleigh-quotient trajectories ("rayleigh") or
    per-snapshot decompositions ("exact") for the learning methods.
    """
    if trajectory_mode not in ("rayleigh", "exact"):
        raise ValueError(f"unknown trajectory mode {trajectory_mode!r}")
    canonical, transform = resolve_method(method)
    mats = _snapshot_matrices(snapshots)
    t = len(mats)
    selection = select_top_fraction(d, fraction)

    if transform is not None:
        alpha = resolve_alpha(d, transform)
        predicted = transform_values(d.values[selection], transform, alpha)
    elif canonical == TWO_POINT:
        if t < 2:
            raise ValueError("two-point extrapolation needs at least 2 snapshots")
        step = default_earlier_step(t) if earlier_step is None else int(earlier_step)
        if not 1 <= step < t:
            raise ValueError(f"earlier step must lie in 1..{t - 1}, got {step}")
        if trajectory_mode == "rayleigh":
            lam1 = rayleigh_quotients(mats[step - 1], d.vectors[:, selection])
        else:
            lam1 = decompose(mats[step - 1]).values[selection]
        predicted = 2.0 * d.values[selection] - lam1
    else:
        model = "linear" if canonical == LINEAR_REGRESSION else "quadratic"
        if trajectory_mode == "rayleigh":
            trajectories = approximate_trajectories(mats, d, selection)
        else:
            trajectories = exact_trajectories(mats, selection)
        predicted = [fit_trajectory(tr, model) for tr in trajectories]

    values = {j: float(v) for j, v in zip(selection, predicted)}
    return SpectrumForecast(values=values, method=canonical, fraction=fraction)


def predict_scores(
    d: SpectralDecomposition,
    forecast: SpectrumForecast,
    unselected_policy: str = KEEP_CURRENT,
) -> np.ndarray:
    """Score matrix X diag(lam_hat) X.T from a forecast.

    Dimensions absent from the forecast either keep their current eigenvalue
    (``keep_current``) or are zeroed out (``zero``).
    """
    if unselected_policy in (KEEP_CURRENT, "keep"):
        lam_hat = np.array(d.values, dtype=float)
    elif unselected_policy == ZERO:
        lam_hat = np.zeros(d.dimension)
    else:
        raise ValueError(f"unknown unselected policy {unselected_policy!r}")
    dims = _check_selection(forecast.dimensions(), d.dimension)
    for j in dims:
        lam_hat[j] = forecast.values[j]
    return reconstruct(d.vectors, lam_hat)
