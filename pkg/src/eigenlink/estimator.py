"""Scikit-learn style estimator wrapping the spectral forecast pipeline."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .evaluation import pair_scores
from .graph import SnapshotSequence, TemporalGraph, build_snapshots
from .spectral import decompose
from .trajectory import KEEP_CURRENT, forecast_spectrum, predict_scores


class SpectralLinkPredictor(BaseEstimator):
    """Predict next-step link scores from a growing network's spectrum.

    ``fit`` accepts a TemporalGraph, a SnapshotSequence, or any sequence of
    symmetric matrices ordered by time.  It decomposes the final snapshot,
    forecasts the next spectrum with the configured method, and stores the
    resulting score matrix.  ``predict`` then scores 1-based vertex pairs,
    which makes the estimator compose with scikit-learn metrics::

        model = SpectralLinkPredictor(method="linreg", fraction=0.08)
        auc = roc_auc_score(labels, model.fit(graph).predict(candidate_pairs))

    Parameters
    ----------
    method : str
        ``extrapolate``, ``linreg``, ``quadreg``, ``triangle``,
        ``exp:<alpha|auto>`` or ``neumann:<alpha|auto>``.
    snapshot_count : int
        Number of cumulative snapshots built when fitting a TemporalGraph.
    fraction : float
        Top fraction of latent dimensions (by absolute eigenvalue) to forecast.
    unselected_policy : str
        ``keep_current`` keeps the present eigenvalue for dimensions outside
        the fraction; ``zero`` drops them.
    trajectory_mode : str
        ``rayleigh`` (fixed final eigenvectors) or ``exact`` (one
        decomposition per snapshot) for the learning methods.
    earlier_step : int or None
        Back-reference snapshot for ``extrapolate``; defaults to the 75%
        position.
    """

    def __init__(
        self,
        method: str = "linreg",
        snapshot_count: int = 10,
        fraction: float = 1.0,
        unselected_policy: str = KEEP_CURRENT,
        trajectory_mode: str = "rayleigh",
        earlier_step: int | None = None,
    ):
        self.method = method
        self.snapshot_count = snapshot_count
        self.fraction = fraction
        self.unselected_policy = unselected_policy
        self.trajectory_mode = trajectory_mode
        self.earlier_step = earlier_step

    def fit(self, X, y=None):
        if isinstance(X, TemporalGraph):
            snapshots = build_snapshots(X, self.snapshot_count)
        elif isinstance(X, SnapshotSequence):
            snapshots = X
        else:
            snapshots = SnapshotSequence(matrices=tuple(np.asarray(m, dtype=float) for m in X))
        self.snapshots_ = snapshots
        self.decomposition_ = decompose(snapshots.final)
        self.forecast_ = forecast_spectrum(
            snapshots,
            self.decomposition_,
            self.method,
            fraction=self.fraction,
            earlier_step=self.earlier_step,
            trajectory_mode=self.trajectory_mode,
        )
        self.scores_ = predict_scores(
            self.decomposition_, self.forecast_, self.unselected_policy
        )
        self.n_vertices_ = snapshots.dimension
        return self

    def predict(self, X) -> np.ndarray:
        """Scores for an array-like of (source, target) 1-based vertex pairs."""
        self._check_fitted()
        pairs = [(int(u), int(v)) for u, v in np.asarray(X).reshape(-1, 2)]
        return pair_scores(self.scores_, pairs)

    def score_matrix(self) -> np.ndarray:
        """Full symmetric score matrix for the next time step."""
        self._check_fitted()
        return self.scores_

    def _check_fitted(self):
        if not hasattr(self, "scores_"):
            raise NotFittedError("SpectralLinkPredictor must be fitted before predicting")
