"""Input validation helpers shared by the numerical modules."""

from __future__ import annotations

import numpy as np

SYMMETRY_TOL = 1e-8


def as_matrix(a, name: str = "a") -> np.ndarray:
    """Coerce to a square float64 matrix with finite entries."""
    m = np.asarray(a, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} has non-finite entries")
    return m


def as_symmetric_matrix(a, name: str = "a") -> np.ndarray:
    """Coerce to a square matrix and reject asymmetry beyond rounding noise."""
    m = as_matrix(a, name)
    scale = max(1.0, float(np.max(np.abs(m))) if m.size else 0.0)
    asym = float(np.max(np.abs(m - m.T))) if m.size else 0.0
    if asym > SYMMETRY_TOL * scale:
        raise ValueError(f"{name} is not symmetric (max |a - a.T| = {asym:.3e})")
    return m


def as_vector(x, length: int | None = None, name: str = "x") -> np.ndarray:
    """Coerce to a 1-d float64 vector, optionally of a fixed length."""
    v = np.asarray(x, dtype=float).reshape(-1)
    if length is not None and v.shape[0] != length:
        raise ValueError(f"{name} must have length {length}, got {v.shape[0]}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} has non-finite entries")
    return v


def check_fraction(value: float, name: str = "fraction") -> float:
    """Validate a value in the half-open interval (0, 1]."""
    f = float(value)
    if not 0.0 < f <= 1.0:
        raise ValueError(f"{name} must be in (0, 1], got {f}")
    return f


def check_ratio(value: float, name: str = "ratio") -> float:
    """Validate a value strictly inside (0, 1)."""
    r = float(value)
    if not 0.0 < r < 1.0:
        raise ValueError(f"{name} must be in (0, 1), got {r}")
    return r
