"""Per-transition anomaly scoring from rank, probability deviation, and certainty.

The score is the product of three factors, each in [0, 1] in the default
(corrected) mode: a log-rank factor that is 0 for the most probable
successor, a probability-deviation factor relative to the row maximum,
and an entropy-derived certainty that discounts deviations taken from
high-entropy (inherently uncertain) states. Off-graph transitions and
unknown states score 1, the hard ceiling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import SequenceTooShort
from .graph import ReferenceGraph, row_entropy, transition_row


class Factor2Mode(str, Enum):
    CORRECTED = "corrected"  # 1 - p / max p, clamped to [0, 1]
    LITERAL = "literal"      # 1 + p / max p, unclamped


@dataclass(frozen=True)
class AnomalyConfig:
    use_certainty: bool = True
    factor2_mode: Factor2Mode = Factor2Mode.CORRECTED
    k: int = 5

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")


@dataclass(frozen=True)
class StepAssessment:
    state: str
    observed: str
    rank: int | None          # 1-based position in the sorted row; None off-row
    probability: float        # row probability of the observed transition
    entropy: float            # row entropy in nats
    certainty: float
    score: float
    suggestions: tuple[tuple[str, float], ...]
    unknown_state: bool = False


@dataclass(frozen=True)
class AnomalyReport:
    assessments: tuple[StepAssessment, ...]  # only strictly positive scores
    full_trace: tuple[StepAssessment, ...]


def observed_certainty(p: float, entropy: float) -> float:
    """1 minus the observed transition's surprisal share of the row entropy.

    Conventions: p in {0, 1} contributes zero surprisal; a zero-entropy row
    is fully certain.
    """
    if entropy <= 0.0:
        return 1.0
    surprisal = 0.0 if p <= 0.0 or p >= 1.0 else -p * math.log(p)
    return 1.0 - surprisal / entropy


def topk_next(graph: ReferenceGraph, state: str, k: int) -> tuple[tuple[str, float], ...]:
    """First min(k, row size) entries of the sorted row; empty for unknown states."""
    if k < 1:
        raise ValueError("k must be >= 1")
    row = transition_row(graph, state)
    return tuple((lbl, p) for lbl, _, p in row.successors[:k])


def _factor_rank(rank: int, n_succ: int) -> float:
    if rank == 1:
        return 0.0
    return math.log(rank) / math.log(n_succ)


def _factor_prob(p: float, max_p: float, mode: Factor2Mode) -> float:
    if mode is Factor2Mode.LITERAL:
        return 1.0 + p / max_p
    return min(1.0, max(0.0, 1.0 - p / max_p))


def assess_transition(
    graph: ReferenceGraph,
    state: str,
    observed: str,
    config: AnomalyConfig = AnomalyConfig(),
) -> StepAssessment:
    row = transition_row(graph, state)
    suggestions = tuple((lbl, p) for lbl, _, p in row.successors[: config.k])
    if not row.successors:
        return StepAssessment(
            state=state, observed=observed, rank=None, probability=0.0,
            entropy=0.0, certainty=1.0, score=1.0, suggestions=(),
            unknown_state=True,
        )
    entropy = row_entropy(row)
    rank = row.rank_of(observed)
    if rank is None:
        # Transition never seen in training: maximal severity by convention.
        return StepAssessment(
            state=state, observed=observed, rank=None, probability=0.0,
            entropy=entropy, certainty=1.0, score=1.0, suggestions=suggestions,
        )
    p = row.probability_of(observed)
    max_p = row.successors[0][2]
    certainty = observed_certainty(p, entropy) if config.use_certainty else 1.0
    score = _factor_rank(rank, len(row)) * _factor_prob(p, max_p, config.factor2_mode) * certainty
    return StepAssessment(
        state=state, observed=observed, rank=rank, probability=p,
        entropy=entropy, certainty=certainty, score=score, suggestions=suggestions,
    )


def assess_sequence(
    graph: ReferenceGraph,
    sequence: list[str],
    config: AnomalyConfig = AnomalyConfig(),
) -> AnomalyReport:
    """Assess every consecutive pair; the headline list keeps only positive scores."""
    if len(sequence) < 2:
        raise SequenceTooShort("need at least two labels to assess transitions")
    trace = tuple(
        assess_transition(graph, src, dst, config)
        for src, dst in zip(sequence, sequence[1:])
    )
    return AnomalyReport(
        assessments=tuple(a for a in trace if a.score > 0.0),
        full_trace=trace,
    )
