"""Timestamped edge lists, largest connected component and cumulative snapshots.

Vertices are 1-based contiguous integers (the parser maps arbitrary labels to
indices); adjacency matrices place vertex ``v`` at row ``v - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np


class EdgeListParseError(ValueError):
    """Malformed edge-list input; carries the offending line number."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class TemporalEdge:
    """Undirected edge with a creation time, stored with source < target."""

    source: int
    target: int
    time: float

    def __post_init__(self):
        if self.source == self.target:
            raise ValueError(f"self-loop on vertex {self.source} is not allowed")
        s, t = self.source, self.target
        if s > t:
            object.__setattr__(self, "source", t)
            object.__setattr__(self, "target", s)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.source, self.target)


def _sort_key(e: TemporalEdge):
    return (e.time, e.source, e.target)


@dataclass(frozen=True)
class TemporalGraph:
    """Simple undirected graph over vertices 1..vertex_count with timed edges.

    Edges are kept sorted by (time, source, target) so downstream splits and
    snapshots are deterministic.
    """

    vertex_count: int
    edges: tuple[TemporalEdge, ...]

    def __post_init__(self):
        if self.vertex_count <= 0:
            raise ValueError("vertex_count must be positive")
        edges = tuple(sorted(self.edges, key=_sort_key))
        object.__setattr__(self, "edges", edges)
        seen = set()
        for e in edges:
            if not (1 <= e.source <= self.vertex_count and 1 <= e.target <= self.vertex_count):
                raise ValueError(
                    f"edge {e.pair} outside vertex range 1..{self.vertex_count}"
                )
            if e.pair in seen:
                raise ValueError(f"duplicate edge {e.pair}")
            seen.add(e.pair)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_pairs(self) -> set[tuple[int, int]]:
        return {e.pair for e in self.edges}


class ParseResult(NamedTuple):
    graph: TemporalGraph
    self_loop_count: int
    duplicate_count: int


def _parse_time(token: str, line_number: int) -> float:
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return float(token)
    except ValueError:
        raise EdgeListParseError(f"unparsable timestamp {token!r}", line_number) from None


def parse_edge_list(lines: Iterable[str], delimiter: str | None = None) -> ParseResult:
    """Parse a ``source target timestamp`` edge list into a TemporalGraph.

    Parameters
    ----------
    lines : iterable of str
        Text lines; ``#`` starts a comment line, blank lines are skipped.
    delimiter : str or None
        Field separator; None splits on any whitespace.

    Vertex labels may be arbitrary strings and are mapped to contiguous
    1-based indices in order of first appearance.  As a special case, when
    every label is already a decimal integer and the labels form exactly the
    set {1..n}, labels are taken as indices verbatim, which makes re-parsing
    a serialized graph the identity.  Duplicate edges keep their earliest
    timestamp; self-loops are dropped and counted.
    """
    records: list[tuple[str, str, float]] = []
    seen_labels: list[tuple[str, ...]] = []
    self_loops = 0
    for line_number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split(delimiter)
        if len(fields) != 3:
            raise EdgeListParseError(
                f"expected 3 fields (source target timestamp), got {len(fields)}",
                line_number,
            )
        u, v, t_token = fields
        t = _parse_time(t_token, line_number)
        if u == v:
            self_loops += 1
            seen_labels.append((u,))
            continue
        records.append((u, v, t))
        seen_labels.append((u, v))

    if not records and not self_loops:
        raise EdgeListParseError("empty input: no edge lines found")

    labels: list[str] = []
    first_seen: dict[str, int] = {}
    for group in seen_labels:
        for label in group:
            if label not in first_seen:
                first_seen[label] = len(labels) + 1
                labels.append(label)

    index = first_seen
    if all(lbl.isdigit() for lbl in labels):
        numeric = {int(lbl) for lbl in labels}
        if numeric == set(range(1, len(labels) + 1)):
            index = {lbl: int(lbl) for lbl in labels}

    earliest: dict[tuple[int, int], float] = {}
    duplicates = 0
    for u, v, t in records:
        a, b = index[u], index[v]
        pair = (a, b) if a < b else (b, a)
        if pair in earliest:
            duplicates += 1
            earliest[pair] = min(earliest[pair], t)
        else:
            earliest[pair] = t

    edges = tuple(TemporalEdge(s, t, w) for (s, t), w in earliest.items())
    graph = TemporalGraph(vertex_count=len(labels), edges=edges)
    return ParseResult(graph, self_loops, duplicates)


def serialize_edge_list(g: TemporalGraph, delimiter: str = " ") -> str:
    """Canonical text form: one ``source target time`` line, sorted by pair."""
    lines = []
    for e in sorted(g.edges, key=lambda e: e.pair):
        t = int(e.time) if float(e.time).is_integer() else e.time
        lines.append(f"{e.source}{delimiter}{e.target}{delimiter}{t}")
    return "\n".join(lines) + "\n"


def largest_connected_component(g: TemporalGraph) -> TemporalGraph:
    """Induced subgraph on the largest component, re-indexed contiguously.

    Ties between equally sized components go to the one containing the
    smallest original vertex index; the relative order of surviving vertices
    is preserved.
    """
    parent = list(range(g.vertex_count + 1))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in g.edges:
        ru, rv = find(e.source), find(e.target)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    members: dict[int, list[int]] = {}
    for v in range(1, g.vertex_count + 1):
        members.setdefault(find(v), []).append(v)
    best = max(members.values(), key=lambda vs: (len(vs), -vs[0]))

    remap = {v: i for i, v in enumerate(best, start=1)}
    kept = tuple(
        TemporalEdge(remap[e.source], remap[e.target], e.time)
        for e in g.edges
        if e.source in remap and e.target in remap
    )
    return TemporalGraph(vertex_count=len(best), edges=kept)


@dataclass(frozen=True, eq=False)
class SnapshotSequence:
    """Cumulative symmetric 0/1 adjacency matrices A_1 <= ... <= A_t."""

    matrices: tuple[np.ndarray, ...]

    def __post_init__(self):
        if not self.matrices:
            raise ValueError("snapshot sequence must hold at least one matrix")
        n = self.matrices[0].shape[0]
        for m in self.matrices:
            if m.shape != (n, n):
                raise ValueError("all snapshots must share one square shape")

    @property
    def step_count(self) -> int:
        return len(self.matrices)

    @property
    def dimension(self) -> int:
        return int(self.matrices[0].shape[0])

    @property
    def final(self) -> np.ndarray:
        return self.matrices[-1]

    def __len__(self) -> int:
        return len(self.matrices)

    def __getitem__(self, i):
        return self.matrices[i]


def adjacency_matrix(g: TemporalGraph) -> np.ndarray:
    """Dense symmetric 0/1 adjacency with zero diagonal."""
    a = np.zeros((g.vertex_count, g.vertex_count))
    for e in g.edges:
        a[e.source - 1, e.target - 1] = 1.0
        a[e.target - 1, e.source - 1] = 1.0
    return a


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def build_snapshots(g: TemporalGraph, step_count: int) -> SnapshotSequence:
    """Split edges by time into ``step_count`` chunks and accumulate them.

    Edges are ordered by (time, source, target) and divided into consecutive
    chunks of near-equal size; when the edge count is not divisible, the
    earliest chunks take one extra edge.  Snapshot i holds the union of
    chunks 1..i, so the final snapshot is the full adjacency matrix.
    """
    if step_count <= 0:
        raise ValueError(f"step_count must be positive, got {step_count}")
    if step_count > g.edge_count:
        raise ValueError(
            f"step_count {step_count} exceeds edge count {g.edge_count}"
        )
    base, extra = divmod(g.edge_count, step_count)
    n = g.vertex_count
    acc = np.zeros((n, n))
    matrices = []
    pos = 0
    for i in range(step_count):
        size = base + (1 if i < extra else 0)
        for e in g.edges[pos : pos + size]:
            acc[e.source - 1, e.target - 1] = 1.0
            acc[e.target - 1, e.source - 1] = 1.0
        pos += size
        matrices.append(_freeze(acc.copy()))
    return SnapshotSequence(matrices=tuple(matrices))


def snapshots_by_time(g: TemporalGraph, boundaries: Sequence[float]) -> SnapshotSequence:
    """Cumulative snapshots at explicit time boundaries (edges with time <= b)."""
    if not boundaries:
        raise ValueError("boundaries must be nonempty")
    if list(boundaries) != sorted(boundaries):
        raise ValueError("boundaries must be nondecreasing")
    n = g.vertex_count
    matrices = []
    for b in boundaries:
        a = np.zeros((n, n))
        for e in g.edges:
            if e.time <= b:
                a[e.source - 1, e.target - 1] = 1.0
                a[e.target - 1, e.source - 1] = 1.0
        matrices.append(_freeze(a))
    return SnapshotSequence(matrices=tuple(matrices))


def temporal_graph_from_snapshots(s: SnapshotSequence) -> TemporalGraph:
    """Recover a TemporalGraph using first-appearance steps as timestamps."""
    n = s.dimension
    edges = []
    seen: set[tuple[int, int]] = set()
    for step, m in enumerate(s.matrices, start=1):
        rows, cols = np.nonzero(np.triu(np.asarray(m), k=1))
        for r, c in zip(rows.tolist(), cols.tolist()):
            if (r, c) not in seen:
                seen.add((r, c))
                edges.append(TemporalEdge(r + 1, c + 1, step))
    if not edges:
        raise ValueError("snapshot sequence holds no edges")
    return TemporalGraph(vertex_count=n, edges=tuple(edges))
