"""Next-action recommendation by fusing graph successors with model predictions.

Both candidate pools are filtered through the action dictionary; the
recommendation minimizes the sum of the 1-based graph rank and the 1-based
prediction rank. An empty intersection yields repeat-action feedback with
the dictionary-valid graph successors as suggestions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import ActionDictionary, TopKPrediction
from .errors import UnknownState
from .graph import ReferenceGraph, transition_row


@dataclass(frozen=True)
class Recommend:
    label: str
    graph_rank: int  # 1-based position in the probability-sorted row
    model_rank: int  # 1-based position in the original prediction list
    rank_sum: int


@dataclass(frozen=True)
class Repeat:
    suggestions: tuple[tuple[str, float], ...]  # dictionary-valid successors, row order


GuidanceOutcome = Union[Recommend, Repeat]


def recommend_next(
    graph: ReferenceGraph,
    state: str,
    prediction: TopKPrediction,
    dictionary: ActionDictionary,
) -> GuidanceOutcome:
    """Rank-sum argmin over dictionary-valid candidates common to graph and model.

    Ranks count positions in the full sorted row and the full prediction list;
    dictionary filtering only gates membership. Ties break toward the smaller
    graph rank, then the lexicographically smaller label.
    """
    row = transition_row(graph, state)
    if not row.successors:
        raise UnknownState(state)

    graph_valid = [(lbl, p) for lbl, _, p in row.successors if lbl in dictionary]
    candidates = []
    for lbl, _ in graph_valid:
        model_rank = prediction.rank_of(lbl)
        if model_rank is None or lbl not in dictionary:
            continue
        graph_rank = row.rank_of(lbl)
        candidates.append((graph_rank + model_rank, graph_rank, lbl, model_rank))
    if not candidates:
        return Repeat(suggestions=tuple(graph_valid))
    rank_sum, graph_rank, label, model_rank = min(candidates)
    return Recommend(label=label, graph_rank=graph_rank, model_rank=model_rank, rank_sum=rank_sum)
