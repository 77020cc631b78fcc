"""Temporal link prediction from eigenvalue trajectories of growing networks."""

__version__ = "0.1.0"

from .diagnostics import (
    AssumptionReport,
    DiagonalityReport,
    diagonality_test,
    eigenvector_evolution,
    stability_matrix,
    verify_assumptions,
)
from .estimator import SpectralLinkPredictor
from .evaluation import (
    EvaluationReport,
    LinkSplit,
    auc_roc,
    run_benchmark,
    sample_negatives,
    temporal_split,
    threshold_predict,
)
from .graph import (
    EdgeListParseError,
    SnapshotSequence,
    TemporalEdge,
    TemporalGraph,
    adjacency_matrix,
    build_snapshots,
    largest_connected_component,
    parse_edge_list,
    serialize_edge_list,
    snapshots_by_time,
    temporal_graph_from_snapshots,
)
from .kernels import (
    SpectralTransform,
    apply_transform,
    parse_transform_spec,
    validate_neumann_alpha,
)
from .spectral import (
    SpectralDecomposition,
    cosine_similarity,
    decompose,
    rayleigh_quotient,
    reconstruct,
)
from .synthetic import (
    SpectralScenario,
    TrajectorySpec,
    dense_sequence,
    generate_spectral_network,
    random_orthogonal_basis,
)
from .trajectory import (
    EigenvalueTrajectory,
    SpectrumForecast,
    approximate_trajectories,
    exact_trajectories,
    fit_trajectory,
    forecast_spectrum,
    linear_extrapolate,
    predict_scores,
    select_top_fraction,
    two_point_estimate,
)

__all__ = [
    "AssumptionReport",
    "DiagonalityReport",
    "EdgeListParseError",
    "EigenvalueTrajectory",
    "EvaluationReport",
    "LinkSplit",
    "SnapshotSequence",
    "SpectralDecomposition",
    "SpectralLinkPredictor",
    "SpectralScenario",
    "SpectralTransform",
    "SpectrumForecast",
    "TemporalEdge",
    "TemporalGraph",
    "TrajectorySpec",
    "adjacency_matrix",
    "apply_transform",
    "approximate_trajectories",
    "auc_roc",
    "build_snapshots",
    "cosine_similarity",
    "decompose",
    "dense_sequence",
    "diagonality_test",
    "eigenvector_evolution",
    "exact_trajectories",
    "fit_trajectory",
    "forecast_spectrum",
    "generate_spectral_network",
    "largest_connected_component",
    "linear_extrapolate",
    "parse_edge_list",
    "parse_transform_spec",
    "predict_scores",
    "random_orthogonal_basis",
    "rayleigh_quotient",
    "reconstruct",
    "run_benchmark",
    "sample_negatives",
    "select_top_fraction",
    "serialize_edge_list",
    "snapshots_by_time",
    "stability_matrix",
    "temporal_graph_from_snapshots",
    "temporal_split",
    "threshold_predict",
    "two_point_estimate",
    "validate_neumann_alpha",
    "verify_assumptions",
]
