"""Weighted directed snapshots and the change set between two of them.

A snapshot is a set of node labels plus a map from ordered pairs to weights
in [0, 1].  :func:`diff` produces a :class:`GraphDifferentialTuple` holding
added/removed nodes, added/removed edges and the signed weight changes on
edges present in both graphs; :func:`apply_diff` is its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

from netevo.errors import InconsistentTupleError, ParseError

#: Weight differences at or below this are treated as "unchanged".
EPSILON = 1e-9

Pair = tuple[str, str]


def _check_node(node) -> None:
    if not isinstance(node, str) or not node:
        raise ValueError(f"node id must be a non-empty string, got {node!r}")


@dataclass(frozen=True)
class GraphSnapshot:
    """Immutable weighted directed graph.

    ``edges`` maps ``(source, target)`` to a weight in ``[0, 1]``.  Self-loops
    are rejected and every edge endpoint must be listed in ``nodes``.
    """

    nodes: frozenset[str]
    edges: Mapping[Pair, float] = field(default_factory=dict)

    def __post_init__(self):
        nodes = frozenset(self.nodes)
        for node in nodes:
            _check_node(node)
        edges = {}
        for (src, dst), weight in dict(self.edges).items():
            if src == dst:
                raise ValueError(f"self-loop on {src!r} is not allowed")
            if src not in nodes or dst not in nodes:
                raise ValueError(f"edge ({src!r}, {dst!r}) has an endpoint outside the node set")
            weight = float(weight)
            if not 0.0 <= weight <= 1.0:
                raise ValueError(f"weight of ({src!r}, {dst!r}) outside [0, 1]: {weight}")
            edges[(src, dst)] = weight
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", MappingProxyType(edges))

    @classmethod
    def from_edges(cls, edges: Mapping[Pair, float] | Iterable[tuple[str, str, float]], nodes=()) -> GraphSnapshot:
        """Build a snapshot whose node set is ``nodes`` plus every edge endpoint."""
        if isinstance(edges, Mapping):
            edge_map = dict(edges)
        else:
            edge_map = {(s, t): w for s, t, w in edges}
        all_nodes = set(nodes)
        for src, dst in edge_map:
            all_nodes.add(src)
            all_nodes.add(dst)
        return cls(frozenset(all_nodes), edge_map)

    @classmethod
    def empty(cls) -> GraphSnapshot:
        return cls(frozenset(), {})

    def __repr__(self):
        return f"GraphSnapshot(nodes={len(self.nodes)}, edges={len(self.edges)})"

    @property
    def sizes(self) -> tuple[int, int]:
        return len(self.nodes), len(self.edges)

    def weight(self, src: str, dst: str) -> float | None:
        return self.edges.get((src, dst))

    def out_weights(self) -> dict[str, float]:
        """Sum of outgoing weights per node that has outgoing edges."""
        totals: dict[str, float] = {}
        for (src, _), w in self.edges.items():
            totals[src] = totals.get(src, 0.0) + w
        return totals


def equivalent(g1: GraphSnapshot, g2: GraphSnapshot, eps: float = EPSILON) -> bool:
    """Same nodes, same edges, and weights equal within ``eps``."""
    if g1.nodes != g2.nodes or g1.edges.keys() != g2.edges.keys():
        return False
    return all(abs(w - g2.edges[k]) <= eps for k, w in g1.edges.items())


@dataclass(frozen=True, order=True)
class WeightDelta:
    """Signed weight change ``w2 - w1`` on an edge present in both graphs."""

    source: str
    target: str
    delta: float

    @property
    def edge(self) -> Pair:
        return (self.source, self.target)


@dataclass(frozen=True)
class GraphDifferentialTuple:
    """Everything that changed between a source and a target snapshot.

    Besides the five change sets, the tuple carries the sizes of both graphs
    and the number of shared edges, which is all the distance measures need.
    ``added_weights`` records the target weight of every added edge so the
    tuple can be replayed onto the source with :func:`apply_diff`.
    """

    added_nodes: frozenset[str]
    removed_nodes: frozenset[str]
    added_edges: frozenset[Pair]
    removed_edges: frozenset[Pair]
    modified_weights: frozenset[WeightDelta]
    common_edge_count: int
    source_sizes: tuple[int, int]
    target_sizes: tuple[int, int]
    added_weights: Mapping[Pair, float] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.added_nodes & self.removed_nodes:
            raise InconsistentTupleError("a node is both added and removed")
        if self.added_edges & self.removed_edges:
            raise InconsistentTupleError("an edge is both added and removed")
        mod_edges = {d.edge for d in self.modified_weights}
        if len(mod_edges) != len(self.modified_weights):
            raise InconsistentTupleError("an edge carries more than one weight change")
        if mod_edges & (self.added_edges | self.removed_edges):
            raise InconsistentTupleError("a modified edge is also added or removed")
        if self.common_edge_count < len(self.modified_weights):
            raise InconsistentTupleError("common_edge_count is smaller than the number of modified edges")
        object.__setattr__(self, "added_weights", MappingProxyType(dict(self.added_weights)))

    @property
    def cardinalities(self) -> tuple[int, int, int, int, int]:
        """``(|V+|, |V-|, |E+|, |E-|, |E delta|)``."""
        return (
            len(self.added_nodes),
            len(self.removed_nodes),
            len(self.added_edges),
            len(self.removed_edges),
            len(self.modified_weights),
        )

    def is_empty(self) -> bool:
        return not any(self.cardinalities)

    def sorted_deltas(self) -> list[WeightDelta]:
        return sorted(self.modified_weights, key=lambda d: d.edge)


def diff(g1: GraphSnapshot, g2: GraphSnapshot, eps: float = EPSILON) -> GraphDifferentialTuple:
    """Change set turning ``g1`` into ``g2``."""
    e1, e2 = g1.edges, g2.edges
    k1, k2 = e1.keys(), e2.keys()
    common = k1 & k2
    added = k2 - k1
    modified = []
    for key in common:
        delta = e2[key] - e1[key]
        if abs(delta) > eps:
            modified.append(WeightDelta(key[0], key[1], delta))
    return GraphDifferentialTuple(
        added_nodes=g2.nodes - g1.nodes,
        removed_nodes=g1.nodes - g2.nodes,
        added_edges=frozenset(added),
        removed_edges=frozenset(k1 - k2),
        modified_weights=frozenset(modified),
        common_edge_count=len(common),
        source_sizes=g1.sizes,
        target_sizes=g2.sizes,
        added_weights={key: e2[key] for key in added},
    )


def apply_diff(g1: GraphSnapshot, t: GraphDifferentialTuple) -> GraphSnapshot:
    """Replay ``t`` onto ``g1``; the inverse of :func:`diff`.

    Raises :class:`InconsistentTupleError` when ``t`` removes or modifies
    something ``g1`` lacks, or adds something ``g1`` already has.
    """
    if g1.sizes != t.source_sizes:
        raise InconsistentTupleError(f"tuple was built against a graph of size {t.source_sizes}, got {g1.sizes}")
    missing = t.removed_nodes - g1.nodes
    if missing:
        raise InconsistentTupleError(f"cannot remove absent nodes: {sorted(missing)}")
    present = t.added_nodes & g1.nodes
    if present:
        raise InconsistentTupleError(f"cannot add nodes already present: {sorted(present)}")

    edges = dict(g1.edges)
    for key in t.removed_edges:
        if key not in edges:
            raise InconsistentTupleError(f"cannot remove absent edge {key}")
        del edges[key]
    for d in t.modified_weights:
        if d.edge not in edges:
            raise InconsistentTupleError(f"cannot modify absent edge {d.edge}")
        # float round-off can push the sum a hair outside [0, 1]
        edges[d.edge] = min(1.0, max(0.0, edges[d.edge] + d.delta))
    for key in t.added_edges:
        if key in g1.edges:
            raise InconsistentTupleError(f"cannot add edge already present {key}")
        if key not in t.added_weights:
            raise InconsistentTupleError(f"added edge {key} has no weight")
        edges[key] = t.added_weights[key]

    nodes = (g1.nodes - t.removed_nodes) | t.added_nodes
    for src, dst in edges:
        if src not in nodes or dst not in nodes:
            raise InconsistentTupleError(f"edge ({src}, {dst}) would dangle after node removal")
    result = GraphSnapshot(nodes, edges)
    if result.sizes != t.target_sizes:
        raise InconsistentTupleError(f"result has size {result.sizes}, tuple expects {t.target_sizes}")
    return result


# --- text format -----------------------------------------------------------


def format_snapshot(g: GraphSnapshot) -> str:
    lines = [f"# nodes: {len(g.nodes)} edges: {len(g.edges)}"]
    for node in sorted(g.nodes):
        if any(c.isspace() for c in node):
            raise ValueError(f"node id {node!r} contains whitespace and cannot be written")
        lines.append(f"N {node}")
    for (src, dst) in sorted(g.edges):
        lines.append(f"E {src} {dst} {g.edges[(src, dst)]:.9f}")
    return "\n".join(lines) + "\n"


def parse_snapshot(text: str, path=None) -> GraphSnapshot:
    nodes: list[str] = []
    edges: dict[Pair, float] = {}
    header = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if header is None:
                parts = line[1:].split()
                if len(parts) == 4 and parts[0] == "nodes:" and parts[2] == "edges:":
                    try:
                        header = (int(parts[1]), int(parts[3]), lineno)
                    except ValueError:
                        raise ParseError("bad header counts", lineno, path) from None
            continue
        parts = line.split()
        if parts[0] == "N" and len(parts) == 2:
            nodes.append(parts[1])
        elif parts[0] == "E" and len(parts) == 4:
            try:
                weight = float(parts[3])
            except ValueError:
                raise ParseError(f"bad weight {parts[3]!r}", lineno, path) from None
            key = (parts[1], parts[2])
            if key in edges:
                raise ParseError(f"duplicate edge {key}", lineno, path)
            edges[key] = weight
        else:
            raise ParseError(f"unrecognised line {line!r}", lineno, path)
    if header is None:
        raise ParseError("missing '# nodes: <n> edges: <m>' header", 1, path)
    if len(set(nodes)) != len(nodes):
        raise ParseError("duplicate node line", None, path)
    if (len(nodes), len(edges)) != header[:2]:
        raise ParseError(
            f"header declares {header[0]} nodes / {header[1]} edges, found {len(nodes)} / {len(edges)}",
            header[2],
            path,
        )
    try:
        return GraphSnapshot(frozenset(nodes), edges)
    except ValueError as exc:
        raise ParseError(str(exc), None, path) from exc


def load_snapshot(path) -> GraphSnapshot:
    path = Path(path)
    return parse_snapshot(path.read_text(encoding="utf-8"), path=path)
