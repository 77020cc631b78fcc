"""Synthetic temporal networks with controlled spectral evolution.

The generator fixes a random orthonormal basis, prescribes one eigenvalue
path per dimension, builds dense matrices X diag(lambda_i) X.T for every
step, and thresholds each of them to a target edge density.  Taking running
unions makes the snapshots cumulative (an edge, once added, persists); the
step past the end is held out as a ground-truth prediction target.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import SnapshotSequence, TemporalEdge, TemporalGraph

REPAIR_LIMIT = 0.10

TRAJECTORY_KINDS = ("constant", "linear", "quadratic", "irregular")


@dataclass(frozen=True)
class TrajectorySpec:
    """Per-dimension eigenvalue path family.

    The base spectrum decays geometrically: b_j = base_scale * decay**j.
    ``growth`` scales the per-step change relative to b_j; ``jitter``
    randomizes the slope per dimension (linear/quadratic); ``noise`` and
    ``drift_bias`` shape the seeded random walk of the irregular family.
    """

    kind: str = "linear"
    base_scale: float = 10.0
    decay: float = 0.85
    growth: float = 0.1
    jitter: float = 0.0
    noise: float = 0.05
    drift_bias: float = 0.5
    acceleration: float = 0.0
    negative_fraction: float = 0.0

    def __post_init__(self):
        if self.kind not in TRAJECTORY_KINDS:
            raise ValueError(
                f"unknown trajectory kind {self.kind!r}, expected one of {TRAJECTORY_KINDS}"
            )
        if not 0.0 <= self.negative_fraction < 1.0:
            raise ValueError("negative_fraction must lie in [0, 1)")


@dataclass(frozen=True)
class SpectralScenario:
    n: int
    steps: int
    basis_seed: int
    trajectory: TrajectorySpec = field(default_factory=TrajectorySpec)
    density: float = 0.05
    rotate_basis_at: int | None = None

    def __post_init__(self):
        if self.n < 4:
            raise ValueError("scenario needs n >= 4")
        if self.steps < 3:
            raise ValueError("scenario needs steps >= 3")
        if not 0.0 < self.density < 1.0:
            raise ValueError("density must lie strictly between 0 and 1")
        if self.edge_target < 1:
            raise ValueError("density too small: no edges would be generated")

    @property
    def edge_target(self) -> int:
        return round(self.density * self.n * (self.n - 1) / 2)


def random_orthogonal_basis(n: int, seed: int) -> np.ndarray:
    """Orthonormal basis from a seeded Gaussian matrix, with fixed column signs."""
    rng = np.random.default_rng(seed)
    q, _ = np.linalg.qr(rng.standard_normal((n, n)))
    for j in range(n):
        col = q[:, j]
        nz = np.nonzero(np.abs(col) > 1e-12)[0]
        if nz.size and col[nz[0]] < 0:
            q[:, j] = -col
    return q


def eigenvalue_paths(sc: SpectralScenario) -> np.ndarray:
    """Ground-truth eigenvalues, shape (steps + 1, n); row i is step i+1."""
    spec = sc.trajectory
    n, t = sc.n, sc.steps
    base = spec.base_scale * spec.decay ** np.arange(n)
    if spec.negative_fraction > 0.0:
        # deterministic sign pattern; the leading dimension stays positive
        sign_rng = np.random.default_rng([sc.basis_seed, 3])
        flips = sign_rng.random(n) < spec.negative_fraction
        flips[0] = False
        base = np.where(flips, -base, base)
    steps = np.arange(t + 1, dtype=float)[:, None]

    if spec.kind == "constant":
        rel = np.ones((t + 1, n))
    elif spec.kind == "linear":
        rng = np.random.default_rng([sc.basis_seed, 1])
        slope = spec.growth * (1.0 + spec.jitter * rng.uniform(-1.0, 1.0, size=n))
        rel = 1.0 + steps * slope[None, :]
    elif spec.kind == "quadratic":
        rng = np.random.default_rng([sc.basis_seed, 1])
        curv = spec.growth * (1.0 + spec.jitter * rng.uniform(-1.0, 1.0, size=n))
        rel = 1.0 + steps**2 * curv[None, :]
    else:  # irregular: seeded noise walk with per-dimension drift
        rng = np.random.default_rng([sc.basis_seed, 2])
        drift = spec.growth * (spec.drift_bias + rng.uniform(-1.0, 1.0, size=n))
        ramp = 1.0 + spec.acceleration * np.arange(t + 1)[:, None] / t
        shocks = spec.noise * rng.standard_normal((t + 1, n))
        increments = drift[None, :] * ramp + shocks
        increments[0, :] = 0.0
        rel = 1.0 + np.cumsum(increments, axis=0)
    return base[None, :] * rel


@dataclass(frozen=True, eq=False)
class DenseSequence:
    """Dense spectral matrices for steps 1..t+1 plus their generating data."""

    matrices: tuple[np.ndarray, ...]
    basis: np.ndarray
    lambdas: np.ndarray


def dense_sequence(sc: SpectralScenario) -> DenseSequence:
    basis = random_orthogonal_basis(sc.n, sc.basis_seed)
    lambdas = eigenvalue_paths(sc)
    bases = [basis] * (sc.steps + 1)
    if sc.rotate_basis_at is not None:
        if not 1 <= sc.rotate_basis_at <= sc.steps:
            raise ValueError("rotate_basis_at must lie within 1..steps")
        rotated = random_orthogonal_basis(sc.n, sc.basis_seed + 7919)
        bases = [
            rotated if i + 1 >= sc.rotate_basis_at else basis
            for i in range(sc.steps + 1)
        ]
    matrices = []
    for i in range(sc.steps + 1):
        x = bases[i]
        m = (x * lambdas[i]) @ x.T
        matrices.append((m + m.T) / 2.0)
    return DenseSequence(matrices=tuple(matrices), basis=basis, lambdas=lambdas)


def _pairs_above(m: np.ndarray, cut: float) -> set[tuple[int, int]]:
    rows, cols = np.triu_indices(m.shape[0], k=1)
    keep = m[rows, cols] >= cut
    return {(int(r), int(c)) for r, c in zip(rows[keep], cols[keep])}


def _pairs_to_matrix(pairs: set[tuple[int, int]], n: int) -> np.ndarray:
    a = np.zeros((n, n))
    for r, c in pairs:
        a[r, c] = 1.0
        a[c, r] = 1.0
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class GroundTruth:
    basis: np.ndarray
    lambdas: np.ndarray
    snapshots: SnapshotSequence
    next_adjacency: np.ndarray
    repaired_edge_count: int


@dataclass(frozen=True, eq=False)
class SyntheticNetwork:
    graph: TemporalGraph
    truth: GroundTruth


def generate_spectral_network(sc: SpectralScenario) -> SyntheticNetwork:
    """Emit a cumulative temporal graph whose growth follows the scenario.

    The score level that the final step matrix reaches at the target density
    becomes a fixed cut: every step matrix is thresholded against it, so an
    edge appears once its growing score crosses the cut.  The running union
    enforces cumulative monotonicity; edges carried only by the union (their
    score later dropped below the cut) count as repairs, and the scenario is
    rejected when repairs exceed 10% of the final edge count.  Timestamps
    record each edge's first step.
    """
    dense = dense_sequence(sc)
    k = sc.edge_target
    final = dense.matrices[sc.steps - 1]
    rows, cols = np.triu_indices(sc.n, k=1)
    cut = float(np.sort(final[rows, cols])[-k])
    raw = [_pairs_above(m, cut) for m in dense.matrices]

    current: set[tuple[int, int]] = set()
    repaired: set[tuple[int, int]] = set()
    first_step: dict[tuple[int, int], int] = {}
    snapshots = []
    for i in range(sc.steps):
        step_raw = raw[i]
        for pair in step_raw - current:
            first_step[pair] = i + 1
        repaired |= current - step_raw
        current = current | step_raw
        snapshots.append(_pairs_to_matrix(current, sc.n))

    final_count = len(current)
    if len(repaired) > REPAIR_LIMIT * final_count:
        raise ValueError(
            f"scenario too irregular to be cumulative: {len(repaired)} repaired edges "
            f"exceed {REPAIR_LIMIT:.0%} of {final_count}"
        )

    next_adjacency = _pairs_to_matrix(current | raw[sc.steps], sc.n)
    edges = tuple(
        TemporalEdge(r + 1, c + 1, step) for (r, c), step in first_step.items()
    )
    graph = TemporalGraph(vertex_count=sc.n, edges=edges)
    truth = GroundTruth(
        basis=dense.basis,
        lambdas=dense.lambdas,
        snapshots=SnapshotSequence(matrices=tuple(snapshots)),
        next_adjacency=next_adjacency,
        repaired_edge_count=len(repaired),
    )
    return SyntheticNetwork(graph=graph, truth=truth)
