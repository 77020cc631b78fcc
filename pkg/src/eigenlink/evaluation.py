"""Temporal train/test splits, AUC scoring and the multi-method benchmark."""

from __future__ import annotations

import json
import math
import time
import warnings
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .graph import (
    SnapshotSequence,
    TemporalGraph,
    build_snapshots,
    temporal_graph_from_snapshots,
)
from .spectral import decompose
from .trajectory import KEEP_CURRENT, forecast_spectrum, predict_scores
from .validation import as_symmetric_matrix, check_ratio

Pair = tuple[int, int]


@dataclass(frozen=True)
class LinkSplit:
    """Train prefix (by creation time) plus the held-out later edges."""

    train: TemporalGraph
    test_positives: frozenset[Pair]
    ratio: float


def temporal_split(g: TemporalGraph, ratio: float) -> LinkSplit:
    """First ceil(ratio * |E|) edges by time become train, the rest test.

    The vertex set is left untouched, so vertices that only appear in test
    edges stay in the matrix as (hard) cold-start rows.
    """
    check_ratio(ratio)
    m = g.edge_count
    n_train = math.ceil(ratio * m)
    if n_train < 1 or n_train >= m:
        raise ValueError(
            f"ratio {ratio} leaves an empty side for {m} edges "
            f"({n_train} train, {m - n_train} test)"
        )
    train_edges = g.edges[:n_train]
    test = frozenset(e.pair for e in g.edges[n_train:])
    train = TemporalGraph(vertex_count=g.vertex_count, edges=train_edges)
    return LinkSplit(train=train, test_positives=test, ratio=ratio)


def sample_negatives(
    g: TemporalGraph,
    split: LinkSplit,
    count: int | None = None,
    seed: int = 0,
) -> set[Pair]:
    """Uniform non-edges, excluding train edges, test positives and self-pairs.

    Deterministic for a fixed seed; the default count matches the number of
    test positives.
    """
    if count is None:
        count = len(split.test_positives)
    if count < 0:
        raise ValueError("count must be nonnegative")
    if count == 0:
        return set()
    n = g.vertex_count
    excluded = split.train.edge_pairs() | set(split.test_positives)
    total = n * (n - 1) // 2
    available = total - len(excluded)
    if available < count:
        raise ValueError(
            f"cannot sample {count} negatives: only {available} non-edges exist"
        )
    rng = np.random.default_rng(seed)
    # Rejection sampling is fast while non-edges are plentiful; fall back to
    # full enumeration when the graph is small or nearly complete.
    if total <= 200_000 or count * 3 > available:
        eligible = [
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if (u, v) not in excluded
        ]
        chosen = rng.choice(len(eligible), size=count, replace=False)
        return {eligible[int(i)] for i in chosen}
    picked: set[Pair] = set()
    attempts = 0
    cap = 200 * count + 10_000
    while len(picked) < count and attempts < cap:
        u, v = (int(x) for x in rng.integers(1, n + 1, size=2))
        attempts += 1
        if u == v:
            continue
        pair = (u, v) if u < v else (v, u)
        if pair in excluded or pair in picked:
            continue
        picked.add(pair)
    if len(picked) < count:
        raise RuntimeError("negative sampling did not finish within the attempt cap")
    return picked


def pair_scores(scores: np.ndarray, pairs: Sequence[Pair]) -> np.ndarray:
    """Read score entries for 1-based vertex pairs."""
    s = as_symmetric_matrix(scores, "scores")
    n = s.shape[0]
    out = np.empty(len(pairs))
    for i, (u, v) in enumerate(pairs):
        if not (1 <= u <= n and 1 <= v <= n):
            raise IndexError(f"pair ({u}, {v}) outside vertex range 1..{n}")
        out[i] = s[u - 1, v - 1]
    return out


def _tie_averaged_ranks(values: np.ndarray) -> np.ndarray:
    order = np.argsort(values, kind="mergesort")
    ranks = np.empty(values.shape[0])
    sorted_vals = values[order]
    i = 0
    while i < sorted_vals.shape[0]:
        j = i
        while j + 1 < sorted_vals.shape[0] and sorted_vals[j + 1] == sorted_vals[i]:
            j += 1
        ranks[order[i : j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


def auc_roc(scores: np.ndarray, positives, negatives) -> float:
    """Exact rank-sum AUC: P(pos > neg) + 0.5 * P(pos == neg)."""
    pos = list(positives)
    neg = list(negatives)
    if not pos or not neg:
        raise ValueError("both the positive and negative class must be nonempty")
    if set(pos) & set(neg):
        raise ValueError("positive and negative pairs must be disjoint")
    pos_scores = pair_scores(scores, pos)
    neg_scores = pair_scores(scores, neg)
    ranks = _tie_averaged_ranks(np.concatenate([pos_scores, neg_scores]))
    u_stat = float(np.sum(ranks[: len(pos)])) - len(pos) * (len(pos) + 1) / 2.0
    return u_stat / (len(pos) * len(neg))


def threshold_predict(scores: np.ndarray, delta: float) -> np.ndarray:
    """Min-max normalize off-diagonal scores to [0, 1], then threshold at delta."""
    s = as_symmetric_matrix(scores, "scores")
    if not 0.0 <= delta <= 1.0:
        raise ValueError(f"delta must lie in [0, 1], got {delta}")
    n = s.shape[0]
    off = ~np.eye(n, dtype=bool)
    lo = float(np.min(s[off]))
    hi = float(np.max(s[off]))
    if hi == lo:
        warnings.warn(
            "constant score matrix: thresholded prediction is degenerate",
            stacklevel=2,
        )
        normalized = np.zeros_like(s)
    else:
        normalized = (s - lo) / (hi - lo)
    predicted = np.where(normalized >= delta, 1.0, 0.0)
    predicted[~off] = 0.0
    return predicted


@dataclass
class EvaluationReport:
    """Per (ratio, method) AUC results for one network."""

    network: str
    seed: int
    results: list[dict] = field(default_factory=list)

    def to_dict(self, include_runtime: bool = True) -> dict:
        results = self.results
        if not include_runtime:
            results = [{k: v for k, v in r.items() if k != "runtime_s"} for r in results]
        return {"network": self.network, "seed": self.seed, "results": results}

    def to_json(self, include_runtime: bool = True) -> str:
        return json.dumps(self.to_dict(include_runtime), sort_keys=True, indent=2)


def run_benchmark(
    source,
    methods: Sequence[str],
    ratios: Sequence[float],
    seed: int = 0,
    snapshot_count: int = 10,
    fraction: float = 1.0,
    unselected_policy: str = KEEP_CURRENT,
    trajectory_mode: str = "rayleigh",
    network: str = "network",
    negative_count: int | None = None,
) -> EvaluationReport:
    """Evaluate every (ratio, method) cell on one network.

    For each ratio: split temporally, rebuild cumulative snapshots from the
    train edges, decompose the final train snapshot once, then score the test
    positives against seeded negative samples for every method.
    """
    if not methods or not ratios:
        raise ValueError("need at least one method and one ratio")
    if isinstance(source, TemporalGraph):
        g = source
    elif isinstance(source, SnapshotSequence):
        g = temporal_graph_from_snapshots(source)
    else:
        raise TypeError("source must be a TemporalGraph or SnapshotSequence")

    report = EvaluationReport(network=network, seed=seed)
    for ri, ratio in enumerate(ratios):
        split = temporal_split(g, ratio)
        snaps = build_snapshots(split.train, snapshot_count)
        d = decompose(snaps.final)
        negatives = sample_negatives(
            g, split, count=negative_count, seed=seed * 1000 + ri
        )
        positives = sorted(split.test_positives)
        for method in methods:
            start = time.perf_counter()
            forecast = forecast_spectrum(
                snaps, d, method, fraction=fraction, trajectory_mode=trajectory_mode
            )
            scores = predict_scores(d, forecast, unselected_policy)
            auc = auc_roc(scores, positives, negatives)
            runtime = time.perf_counter() - start
            report.results.append(
                {
                    "network": network,
                    "ratio": ratio,
                    "method": method,
                    "auc": auc,
                    "runtime_s": runtime,
                    "params": {
                        "snapshot_count": snapshot_count,
                        "fraction": fraction,
                        "unselected_policy": unselected_policy,
                        "trajectory_mode": trajectory_mode,
                        "negatives": len(negatives),
                    },
                }
            )
    return report
