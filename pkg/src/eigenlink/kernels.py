"""Graph kernels expressed as functions applied to the eigenvalue spectrum.

Three transformations are supported: triangle closing (squares every
eigenvalue, equivalent to A @ A), the exponential kernel exp(alpha * A) and
the Neumann kernel (I - alpha * A)^-1.  Applying a transformation keeps the
eigenvectors of the input and only rescales the spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spectral import SpectralDecomposition, reconstruct

TRIANGLE = "triangle_closing"
EXPONENTIAL = "exponential"
NEUMANN = "neumann"
KINDS = (TRIANGLE, EXPONENTIAL, NEUMANN)

EXP_OVERFLOW_LIMIT = 700.0

# Scale-free defaults relative to the spectral radius r: exp uses alpha = 1/r,
# Neumann uses alpha = 0.5/r (always inside its domain alpha * r < 1).
AUTO_EXP_SCALE = 1.0
AUTO_NEUMANN_SCALE = 0.5


@dataclass(frozen=True)
class SpectralTransform:
    """A spectral transformation; ``alpha=None`` means auto-scaled at apply time."""

    kind: str
    alpha: float | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown transform kind {self.kind!r}, expected one of {KINDS}")
        if self.kind == TRIANGLE and self.alpha is not None:
            raise ValueError("triangle closing takes no alpha parameter")
        if self.alpha is not None and self.alpha < 0:
            raise ValueError(f"{self.kind} requires alpha >= 0, got {self.alpha}")

    @classmethod
    def triangle_closing(cls) -> "SpectralTransform":
        return cls(TRIANGLE)

    @classmethod
    def exponential(cls, alpha: float | None = None) -> "SpectralTransform":
        return cls(EXPONENTIAL, alpha)

    @classmethod
    def neumann(cls, alpha: float | None = None) -> "SpectralTransform":
        return cls(NEUMANN, alpha)

    def spec_string(self) -> str:
        if self.kind == TRIANGLE:
            return "triangle"
        tag = "exp" if self.kind == EXPONENTIAL else "neumann"
        arg = "auto" if self.alpha is None else f"{self.alpha:g}"
        return f"{tag}:{arg}"


def parse_transform_spec(spec: str) -> SpectralTransform:
    """Parse ``triangle``, ``exp:<alpha|auto>`` or ``neumann:<alpha|auto>``."""
    name, _, arg = spec.strip().partition(":")
    name = name.lower()
    if name == "triangle":
        if arg:
            raise ValueError("triangle takes no parameter")
        return SpectralTransform.triangle_closing()
    if name in ("exp", "exponential", "neumann"):
        kind = EXPONENTIAL if name.startswith("exp") else NEUMANN
        if arg in ("", "auto"):
            return SpectralTransform(kind, None)
        try:
            alpha = float(arg)
        except ValueError:
            raise ValueError(f"bad alpha in transform spec {spec!r}") from None
        return SpectralTransform(kind, alpha)
    raise ValueError(f"unknown transform spec {spec!r}")


def validate_neumann_alpha(d: SpectralDecomposition, alpha: float) -> bool:
    """True iff ``0 < alpha`` and ``alpha * max|lambda| < 1`` (strict)."""
    return alpha > 0 and alpha * d.spectral_radius < 1.0


def resolve_alpha(d: SpectralDecomposition, f: SpectralTransform) -> float | None:
    """Concrete alpha for ``f`` against the spectrum of ``d``, with domain checks."""
    if f.kind == TRIANGLE:
        return None
    radius = d.spectral_radius
    if f.alpha is None:
        if radius <= 0:
            raise ValueError(
                f"cannot auto-scale alpha for {f.kind}: spectrum is identically zero"
            )
        scale = AUTO_EXP_SCALE if f.kind == EXPONENTIAL else AUTO_NEUMANN_SCALE
        return scale / radius
    alpha = float(f.alpha)
    if f.kind == NEUMANN and alpha * radius >= 1.0:
        raise ValueError(
            f"neumann alpha={alpha} out of domain: need alpha < 1/|lambda_1| = {1.0 / radius:.6g}"
        )
    if f.kind == EXPONENTIAL and alpha * float(np.max(d.values)) > EXP_OVERFLOW_LIMIT:
        raise OverflowError(
            f"exponential kernel overflows: alpha * lambda_max = "
            f"{alpha * float(np.max(d.values)):.3g} > {EXP_OVERFLOW_LIMIT}"
        )
    return alpha


def transform_values(values: np.ndarray, f: SpectralTransform, alpha: float | None) -> np.ndarray:
    """Apply the transform's scalar function to an array of eigenvalues."""
    lam = np.asarray(values, dtype=float)
    if f.kind == TRIANGLE:
        return lam * lam
    if f.kind == EXPONENTIAL:
        return np.exp(alpha * lam)
    return 1.0 / (1.0 - alpha * lam)


def apply_transform(d: SpectralDecomposition, f: SpectralTransform) -> np.ndarray:
    """Score matrix X f(Lambda) X.T; shares the eigenvectors of the input."""
    alpha = resolve_alpha(d, f)
    return reconstruct(d.vectors, transform_values(d.values, f, alpha))
