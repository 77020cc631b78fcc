"""Command-line entry point: ingest, verify, predict, evaluate, generate.

Exit codes: 0 success, 2 usage error, 3 numerical failure, 4 I/O error.
Every run writes a manifest JSON echoing the resolved configuration; wall
clock timestamps live in their own field so result payloads stay
reproducible byte for byte.
"""

from __future__ import annotations

import argparse
import datetime
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .diagnostics import verify_assumptions
from .evaluation import run_benchmark, threshold_predict
from .graph import (
    EdgeListParseError,
    build_snapshots,
    largest_connected_component,
    parse_edge_list,
    serialize_edge_list,
)
from .spectral import decompose
from .synthetic import SpectralScenario, TrajectorySpec, generate_spectral_network
from .trajectory import forecast_spectrum, predict_scores

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4

THREADS_ENV = "EIGENLINK_THREADS"


def _now() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat()


def _write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _write_matrix_csv(path: Path, matrix: np.ndarray) -> None:
    np.savetxt(path, np.asarray(matrix), delimiter=",")


def _write_manifest(path: Path, subcommand: str, config: dict) -> None:
    config = {k: v for k, v in config.items() if k not in ("func", "subcommand")}
    _write_json(path, {"subcommand": subcommand, "config": config, "created_at": _now()})


def _load_graph(path: str, delimiter: str | None, use_lcc: bool):
    with open(path, "r", encoding="utf-8") as handle:
        result = parse_edge_list(handle, delimiter)
    graph = largest_connected_component(result.graph) if use_lcc else result.graph
    return graph, result


def _outdir(arg: str) -> Path:
    out = Path(arg)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _unselected(arg: str) -> str:
    return {"keep": "keep_current", "keep_current": "keep_current", "zero": "zero"}[arg]


def cmd_ingest(args) -> int:
    out = _outdir(args.out)
    graph, result = _load_graph(args.input, args.delimiter, use_lcc=False)
    lcc = largest_connected_component(graph)
    (out / "lcc.edges").write_text(serialize_edge_list(lcc))
    stats = {
        "input": args.input,
        "vertices": graph.vertex_count,
        "edges": graph.edge_count,
        "self_loops_dropped": result.self_loop_count,
        "duplicates_merged": result.duplicate_count,
        "lcc_vertices": lcc.vertex_count,
        "lcc_edges": lcc.edge_count,
    }
    _write_json(out / "stats.json", stats)
    _write_manifest(out / "manifest.json", "ingest", vars(args))
    print(
        f"ingested {graph.vertex_count} vertices / {graph.edge_count} edges; "
        f"largest component {lcc.vertex_count} / {lcc.edge_count}"
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    out = _outdir(args.out)
    graph, _ = _load_graph(args.input, args.delimiter, use_lcc=not args.no_lcc)
    snapshots = build_snapshots(graph, args.steps)
    report = verify_assumptions(
        snapshots,
        fraction=args.fraction,
        earlier_position=args.earlier,
        threshold=args.threshold,
    )
    payload = {
        "dims": report.dims,
        "evolution": {str(j): series.tolist() for j, series in report.evolution.items()},
        "evolution_min": report.evolution_min,
        "diagonality_score": report.diagonality.score,
        "earlier_step": report.earlier_step,
        "threshold": report.threshold,
        "passed": report.passed,
    }
    _write_json(out / "verify.json", payload)
    evolution_table = np.column_stack([report.evolution[j] for j in report.dims])
    _write_matrix_csv(out / "evolution.csv", evolution_table)
    _write_matrix_csv(out / "stability.csv", report.stability)
    _write_matrix_csv(out / "delta.csv", report.diagonality.delta)
    _write_manifest(out / "manifest.json", "verify", vars(args))
    print(report.verdict_line())
    return EXIT_OK


def cmd_predict(args) -> int:
    out = _outdir(args.out)
    graph, _ = _load_graph(args.input, args.delimiter, use_lcc=not args.no_lcc)
    snapshots = build_snapshots(graph, args.steps)
    decomposition = decompose(snapshots.final)
    forecast = forecast_spectrum(
        snapshots,
        decomposition,
        args.method,
        fraction=args.fraction,
        trajectory_mode=args.trajectory_mode,
    )
    scores = predict_scores(decomposition, forecast, _unselected(args.unselected))
    _write_matrix_csv(out / "scores.csv", scores)
    _write_json(
        out / "forecast.json",
        {
            "method": forecast.method,
            "fraction": forecast.fraction,
            "values": {str(j): forecast.values[j] for j in forecast.dimensions()},
        },
    )
    if args.delta is not None:
        _write_matrix_csv(out / "predicted_adjacency.csv", threshold_predict(scores, args.delta))
    _write_manifest(out / "manifest.json", "predict", vars(args))
    print(f"predicted scores for {graph.vertex_count} vertices with {forecast.method}")
    return EXIT_OK


def cmd_evaluate(args) -> int:
    out = _outdir(args.out)
    graph, _ = _load_graph(args.input, args.delimiter, use_lcc=not args.no_lcc)
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    ratios = [float(r) for r in args.ratios.split(",") if r.strip()]
    report = run_benchmark(
        graph,
        methods,
        ratios,
        seed=args.seed,
        snapshot_count=args.steps,
        fraction=args.fraction,
        unselected_policy=_unselected(args.unselected),
        trajectory_mode=args.trajectory_mode,
        network=args.network,
        negative_count=args.negatives,
    )
    (out / "report.json").write_text(report.to_json() + "\n")
    if args.csv:
        lines = ["network,ratio,method,auc,runtime_s"]
        for row in report.results:
            lines.append(
                f"{row['network']},{row['ratio']},{row['method']},"
                f"{row['auc']},{row['runtime_s']}"
            )
        (out / "report.csv").write_text("\n".join(lines) + "\n")
    _write_manifest(out / "manifest.json", "evaluate", vars(args))
    for row in report.results:
        print(f"{row['network']} ratio={row['ratio']} {row['method']}: auc={row['auc']:.4f}")
    return EXIT_OK


def cmd_generate(args) -> int:
    scenario = SpectralScenario(
        n=args.n,
        steps=args.steps,
        basis_seed=args.seed,
        trajectory=TrajectorySpec(
            kind=args.trajectory,
            base_scale=args.base_scale,
            decay=args.decay,
            growth=args.growth,
            jitter=args.jitter,
            noise=args.noise,
            drift_bias=args.drift_bias,
        ),
        density=args.density,
    )
    network = generate_spectral_network(scenario)
    out = Path(args.out)
    if out.parent and not out.parent.exists():
        out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(serialize_edge_list(network.graph))
    truth = network.truth
    rows, cols = np.nonzero(np.triu(truth.next_adjacency, k=1))
    sidecar = {
        "n": scenario.n,
        "steps": scenario.steps,
        "seed": scenario.basis_seed,
        "density": scenario.density,
        "trajectory": vars(args)["trajectory"],
        "eigenvalue_paths": truth.lambdas.tolist(),
        "repaired_edge_count": truth.repaired_edge_count,
        "next_step_edges": [[int(r) + 1, int(c) + 1] for r, c in zip(rows, cols)],
    }
    if args.include_basis:
        sidecar["basis"] = truth.basis.tolist()
    _write_json(out.with_suffix(out.suffix + ".truth.json"), sidecar)
    _write_manifest(out.with_suffix(out.suffix + ".manifest.json"), "generate", vars(args))
    print(
        f"generated {network.graph.vertex_count} vertices / "
        f"{network.graph.edge_count} edges -> {out}"
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eigenlink",
        description="Temporal link prediction from eigenvalue trajectories",
    )
    parser.add_argument("--version", action="version", version=f"eigenlink {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_io(p, needs_out=True):
        p.add_argument("--input", required=True, help="edge list file")
        if needs_out:
            p.add_argument("--out", required=True, help="output directory")
        p.add_argument("--delimiter", default=None, help="field delimiter (default: whitespace)")
        p.add_argument("--no-lcc", action="store_true", help="skip largest-component extraction")

    p_ingest = sub.add_parser("ingest", help="parse, extract largest component, report stats")
    p_ingest.add_argument("--input", required=True)
    p_ingest.add_argument("--out", required=True)
    p_ingest.add_argument("--delimiter", default=None)
    p_ingest.set_defaults(func=cmd_ingest)

    p_verify = sub.add_parser("verify", help="check the constant-eigenvector assumption")
    add_io(p_verify)
    p_verify.add_argument("--steps", type=int, default=10)
    p_verify.add_argument("--fraction", type=float, default=0.08)
    p_verify.add_argument("--earlier", type=float, default=0.75)
    p_verify.add_argument("--threshold", type=float, default=0.9)
    p_verify.set_defaults(func=cmd_verify)

    p_predict = sub.add_parser("predict", help="forecast next-step link scores")
    add_io(p_predict)
    p_predict.add_argument("--method", default="linreg")
    p_predict.add_argument("--steps", type=int, default=10)
    p_predict.add_argument("--fraction", type=float, default=1.0)
    p_predict.add_argument("--unselected", choices=["keep", "keep_current", "zero"], default="keep")
    p_predict.add_argument("--trajectory-mode", choices=["rayleigh", "exact"], default="rayleigh")
    p_predict.add_argument("--delta", type=float, default=None,
                           help="also write a thresholded 0/1 adjacency")
    p_predict.set_defaults(func=cmd_predict)

    p_eval = sub.add_parser("evaluate", help="AUC benchmark over methods and ratios")
    add_io(p_eval)
    p_eval.add_argument("--methods", default="triangle,exp:auto,neumann:auto,extrapolate,linreg,quadreg")
    p_eval.add_argument("--ratios", default="0.75,0.8")
    p_eval.add_argument("--seed", type=int, default=0)
    p_eval.add_argument("--steps", type=int, default=10)
    p_eval.add_argument("--fraction", type=float, default=1.0)
    p_eval.add_argument("--unselected", choices=["keep", "keep_current", "zero"], default="keep")
    p_eval.add_argument("--trajectory-mode", choices=["rayleigh", "exact"], default="rayleigh")
    p_eval.add_argument("--negatives", type=int, default=None)
    p_eval.add_argument("--network", default="network")
    p_eval.add_argument("--csv", action="store_true")
    p_eval.set_defaults(func=cmd_evaluate)

    p_gen = sub.add_parser("generate", help="synthetic temporal network with known spectrum")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--steps", type=int, required=True)
    p_gen.add_argument("--trajectory", choices=["constant", "linear", "quadratic", "irregular"],
                       default="linear")
    p_gen.add_argument("--density", type=float, default=0.05)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--base-scale", type=float, default=10.0)
    p_gen.add_argument("--decay", type=float, default=0.85)
    p_gen.add_argument("--growth", type=float, default=0.1)
    p_gen.add_argument("--jitter", type=float, default=0.0)
    p_gen.add_argument("--noise", type=float, default=0.05)
    p_gen.add_argument("--drift-bias", type=float, default=0.5)
    p_gen.add_argument("--out", required=True, help="edge list output file")
    p_gen.add_argument("--include-basis", action="store_true")
    p_gen.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    if THREADS_ENV in os.environ:
        for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
            os.environ.setdefault(var, os.environ[THREADS_ENV])
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (EdgeListParseError, OSError) as exc:
        _fail(EXIT_IO, exc)
        return EXIT_IO
    except (np.linalg.LinAlgError, OverflowError, FloatingPointError) as exc:
        _fail(EXIT_NUMERICAL, exc)
        return EXIT_NUMERICAL
    except (ValueError, TypeError, KeyError, IndexError) as exc:
        _fail(EXIT_USAGE, exc)
        return EXIT_USAGE


def _fail(code: int, exc: Exception) -> None:
    message = " ".join(str(exc).split())
    print(f"eigenlink-error code={code} type={type(exc).__name__} message={message}",
          file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
