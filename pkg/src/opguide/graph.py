"""First-order Markov reference graph over action labels.

Edges carry raw transition counts plus globally normalized weights
(count / total transitions). All downstream probability math uses
row-normalized probabilities, which are invariant to the global scale.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .core import Level
from .errors import EmptyGraph, MalformedGraphFile

WEIGHT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class TransitionRow:
    """Successors of one state, row-normalized and probability-sorted."""

    state: str
    successors: tuple[tuple[str, int, float], ...]  # (label, count, row probability)

    def __len__(self) -> int:
        return len(self.successors)

    @property
    def labels(self) -> list[str]:
        return [lbl for lbl, _, _ in self.successors]

    def rank_of(self, label: str) -> int | None:
        """1-based position in the sorted row, None if absent."""
        for i, (lbl, _, _) in enumerate(self.successors, start=1):
            if lbl == label:
                return i
        return None

    def probability_of(self, label: str) -> float:
        for lbl, _, p in self.successors:
            if lbl == label:
                return p
        return 0.0


class ReferenceGraph:
    """Directed transition graph with counts, global weights, and cached rows."""

    def __init__(self, level: Level, edges: dict[tuple[str, str], int]):
        if not edges:
            raise EmptyGraph("no transitions")
        self.level = level
        self.counts: dict[tuple[str, str], int] = dict(edges)
        self.total_transitions: int = sum(edges.values())
        vocab: set[str] = set()
        for src, dst in edges:
            vocab.add(src)
            vocab.add(dst)
        self.vocab: tuple[str, ...] = tuple(sorted(vocab))
        self._rows: dict[str, TransitionRow] = {}
        out: dict[str, list[tuple[str, int]]] = {}
        for (src, dst), count in edges.items():
            out.setdefault(src, []).append((dst, count))
        for src, succs in out.items():
            total = sum(c for _, c in succs)
            entries = [(dst, c, c / total) for dst, c in succs]
            entries.sort(key=lambda e: (-e[2], e[0]))
            self._rows[src] = TransitionRow(state=src, successors=tuple(entries))

    def weight(self, src: str, dst: str) -> float:
        return self.counts[(src, dst)] / self.total_transitions

    def __eq__(self, other) -> bool:
        if not isinstance(other, ReferenceGraph):
            return NotImplemented
        return (
            self.level == other.level
            and self.counts == other.counts
            and self.total_transitions == other.total_transitions
        )

    def __hash__(self):
        return hash((self.level, frozenset(self.counts.items())))


def build_reference_graph(sequences: list[list[str]], level: Level = Level.ACTION) -> ReferenceGraph:
    """Accumulate consecutive-pair counts over all sequences; no cross-sequence pairs."""
    edges: dict[tuple[str, str], int] = {}
    for seq in sequences:
        for src, dst in zip(seq, seq[1:]):
            edges[(src, dst)] = edges.get((src, dst), 0) + 1
    if not edges:
        raise EmptyGraph("no sequence contributes a transition")
    return ReferenceGraph(level=level, edges=edges)


def transition_row(graph: ReferenceGraph, state: str) -> TransitionRow:
    """Sorted successor row; empty for unknown or absorbing states."""
    row = graph._rows.get(state)
    if row is None:
        return TransitionRow(state=state, successors=())
    return row


def row_entropy(row: TransitionRow) -> float:
    """Shannon entropy in nats of the row distribution; empty row gives 0."""
    h = 0.0
    for _, _, p in row.successors:
        if p > 0.0:
            h -= p * math.log(p)
    return h


def _sig12(x: float) -> float:
    return float(f"{x:.12g}")


def serialize_graph(graph: ReferenceGraph) -> str:
    """Canonical text form: sorted keys, sorted edges, 12 significant digits."""
    doc = {
        "edges": [
            {
                "count": count,
                "dst": dst,
                "src": src,
                "weight": _sig12(count / graph.total_transitions),
            }
            for (src, dst), count in sorted(graph.counts.items())
        ],
        "level": graph.level.value,
        "total_transitions": graph.total_transitions,
        "vocab": list(graph.vocab),
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def deserialize_graph(text: str) -> ReferenceGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedGraphFile(exc.msg, position=f"char {exc.pos}") from None
    if not isinstance(doc, dict):
        raise MalformedGraphFile("top-level value is not an object")
    for key in ("edges", "level", "total_transitions", "vocab"):
        if key not in doc:
            raise MalformedGraphFile(f"missing field {key!r}")
    try:
        level = Level(doc["level"])
    except ValueError:
        raise MalformedGraphFile(f"unknown level {doc['level']!r}") from None
    total = doc["total_transitions"]
    if not isinstance(total, int) or total <= 0:
        raise MalformedGraphFile("total_transitions must be a positive integer")
    vocab = doc["vocab"]
    if not isinstance(vocab, list) or not all(isinstance(v, str) for v in vocab):
        raise MalformedGraphFile("vocab must be an array of strings")
    vocab_set = set(vocab)
    edges: dict[tuple[str, str], int] = {}
    for i, edge in enumerate(doc["edges"]):
        pos = f"edges[{i}]"
        if not isinstance(edge, dict):
            raise MalformedGraphFile("edge is not an object", position=pos)
        try:
            src, dst, count, weight = edge["src"], edge["dst"], edge["count"], edge["weight"]
        except KeyError as exc:
            raise MalformedGraphFile(f"edge missing field {exc.args[0]!r}", position=pos) from None
        if src not in vocab_set or dst not in vocab_set:
            raise MalformedGraphFile("edge endpoint not in vocab", position=pos)
        if not isinstance(count, int) or count < 1:
            raise MalformedGraphFile("edge count must be a positive integer", position=pos)
        if (src, dst) in edges:
            raise MalformedGraphFile("duplicate edge", position=pos)
        if abs(weight - count / total) > WEIGHT_TOLERANCE:
            raise MalformedGraphFile("edge weight inconsistent with count / total_transitions", position=pos)
        edges[(src, dst)] = count
    if not edges:
        raise MalformedGraphFile("graph has no edges")
    if sum(edges.values()) != total:
        raise MalformedGraphFile("edge counts do not sum to total_transitions")
    graph = ReferenceGraph(level=level, edges=edges)
    if set(graph.vocab) != vocab_set:
        raise MalformedGraphFile("vocab does not match edge endpoints")
    return graph
