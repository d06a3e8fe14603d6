"""Pluggable Top-k prediction sources standing in for a live anticipation model.

All randomness goes through ``random.Random`` (Mersenne Twister) with an
explicit seed, so prediction streams and sampled episodes are reproducible
byte-for-byte across platforms.
"""

from __future__ import annotations

import random

from .core import TopKPrediction
from .errors import EmptyGraph, SourceExhausted
from .graph import ReferenceGraph, transition_row
from .anomaly import topk_next

_DEFAULT_SCORES = (0.9, 0.8, 0.7, 0.6, 0.5)


class FileReplay:
    """Replays a recorded prediction stream verbatim."""

    def __init__(self, predictions: list[TopKPrediction]):
        self._predictions = list(predictions)
        self._cursor = 0

    def next_topk(self) -> TopKPrediction:
        if self._cursor >= len(self._predictions):
            raise SourceExhausted("prediction stream exhausted")
        pred = self._predictions[self._cursor]
        self._cursor += 1
        return pred


class NoisyOracle:
    """Emits the ground-truth label at rank 1 with probability 1 - epsilon.

    On corruption the truth is demoted to a random rank > 1 among seeded
    vocabulary fillers, unless drop_truth removes it entirely.
    """

    def __init__(
        self,
        ground_truth: list[str],
        vocab: list[str],
        epsilon: float,
        seed: int,
        drop_truth: bool = False,
    ):
        if not 0.0 <= epsilon <= 1.0:
            raise ValueError("epsilon must lie in [0, 1]")
        self._truth = list(ground_truth)
        self._vocab = sorted(set(vocab))
        self._epsilon = epsilon
        self._drop_truth = drop_truth
        self._rng = random.Random(seed)
        self._cursor = 0

    def next_topk(self) -> TopKPrediction:
        if self._cursor >= len(self._truth):
            raise SourceExhausted("ground-truth sequence exhausted")
        truth = self._truth[self._cursor]
        self._cursor += 1
        fillers = [lbl for lbl in self._vocab if lbl != truth]
        self._rng.shuffle(fillers)
        corrupt = self._rng.random() < self._epsilon
        if corrupt and self._drop_truth:
            labels = fillers[:5]
        elif corrupt:
            labels = fillers[:4]
            pos = self._rng.randrange(1, len(labels) + 1)
            labels.insert(pos, truth)
        else:
            labels = [truth] + fillers[:4]
        return TopKPrediction(
            entries=tuple(zip(labels, _DEFAULT_SCORES[: len(labels)]))
        )


class MarkovSampler:
    """Walks the reference graph, predicting the Top-k row of its current state."""

    def __init__(self, graph: ReferenceGraph, seed: int, start_state: str | None = None, k: int = 5):
        self._graph = graph
        self._rng = random.Random(seed)
        self._k = k
        if start_state is None:
            start_state = _uniform_start(graph, self._rng)
        self.current_state = start_state

    def next_topk(self) -> TopKPrediction:
        entries = topk_next(self._graph, self.current_state, self._k)
        if not entries:
            raise SourceExhausted(f"state {self.current_state!r} has no successors")
        pred = TopKPrediction(entries=entries)
        self.current_state = _sample_row(self._graph, self.current_state, self._rng)
        return pred


def _uniform_start(graph: ReferenceGraph, rng: random.Random) -> str:
    starts = [lbl for lbl in graph.vocab if transition_row(graph, lbl).successors]
    return starts[rng.randrange(len(starts))]


def _sample_row(graph: ReferenceGraph, state: str, rng: random.Random) -> str:
    row = transition_row(graph, state)
    u = rng.random()
    acc = 0.0
    for lbl, _, p in row.successors:
        acc += p
        if u < acc:
            return lbl
    return row.successors[-1][0]


def sample_episode(graph: ReferenceGraph, length: int, seed: int) -> list[str]:
    """Seeded random walk; truncates early at absorbing states."""
    if length < 2:
        raise ValueError("episode length must be >= 2")
    rng = random.Random(seed)
    state = _uniform_start(graph, rng)
    episode = [state]
    while len(episode) < length:
        if not transition_row(graph, state).successors:
            break
        state = _sample_row(graph, state, rng)
        episode.append(state)
    return episode
