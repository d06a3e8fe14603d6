"""Time-Weighted Sequence Accuracy: per-step scores and session aggregation.

A step scores the capped ratio of the label's median reference duration to
the actual duration, gated by a correctness indicator. Two indicator modes
are supported: membership of the performed label in that step's recommended
set (default), or strict whole-sequence equality with an expected sequence.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from enum import Enum

from .core import ReferenceTimes
from .errors import NonPositiveDuration


class TwsaMode(str, Enum):
    TOP5_MEMBERSHIP = "top5"
    STRICT_SEQUENCE = "strict"


@dataclass(frozen=True)
class StepRecord:
    label: str
    duration_s: float
    recommended: tuple[str, ...] = ()

    def __post_init__(self):
        if self.duration_s <= 0:
            raise NonPositiveDuration(f"duration must be positive, got {self.duration_s}")


@dataclass(frozen=True)
class ClassStats:
    minimum: float   # smallest non-outlier value (lower whisker)
    q1: float
    median: float
    q3: float
    maximum: float   # largest non-outlier value (upper whisker)
    outliers: tuple[float, ...]


@dataclass(frozen=True)
class TwsaReport:
    step_scores: tuple[float, ...]
    class_stats: dict[str, ClassStats]
    overall: float


def step_twsa(t_ref: float, t_actual: float, correct: bool) -> float:
    if t_ref <= 0 or t_actual <= 0:
        raise NonPositiveDuration("reference and actual durations must be positive")
    if not correct:
        return 0.0
    return min(t_ref / t_actual, 1.0)


def _tukey_hinges(sorted_vals: list[float]) -> tuple[float, float]:
    """Lower and upper hinges: medians of the two halves, middle value shared when odd."""
    n = len(sorted_vals)
    half = (n + 1) // 2
    return (
        float(statistics.median(sorted_vals[:half])),
        float(statistics.median(sorted_vals[n - half:])),
    )


def _class_stats(values: list[float]) -> ClassStats:
    vals = sorted(values)
    q1, q3 = _tukey_hinges(vals)
    med = float(statistics.median(vals))
    iqr = q3 - q1
    lo, hi = q1 - 1.5 * iqr, q3 + 1.5 * iqr
    inside = [v for v in vals if lo <= v <= hi]
    outliers = tuple(v for v in vals if v < lo or v > hi)
    return ClassStats(
        minimum=inside[0], q1=q1, median=med, q3=q3, maximum=inside[-1],
        outliers=outliers,
    )


def evaluate_session(
    records: list[StepRecord],
    reference_times: ReferenceTimes,
    mode: TwsaMode = TwsaMode.TOP5_MEMBERSHIP,
    expected_sequence: list[str] | None = None,
) -> TwsaReport:
    """Score every step, aggregate the mean, and summarize per-class distributions.

    Strict mode gates all steps on whole-sequence equality with
    expected_sequence, which must be supplied.
    """
    if not records:
        raise ValueError("session has no records")
    if mode is TwsaMode.STRICT_SEQUENCE:
        if expected_sequence is None:
            raise ValueError("strict mode requires the expected sequence")
        all_correct = [r.label for r in records] == list(expected_sequence)
        flags = [all_correct] * len(records)
    else:
        flags = [r.label in r.recommended for r in records]
    scores = tuple(
        step_twsa(reference_times.get(r.label), r.duration_s, flag)
        for r, flag in zip(records, flags)
    )
    by_class: dict[str, list[float]] = {}
    for r, s in zip(records, scores):
        by_class.setdefault(r.label, []).append(s)
    class_stats = {lbl: _class_stats(vals) for lbl, vals in sorted(by_class.items())}
    return TwsaReport(
        step_scores=scores,
        class_stats=class_stats,
        overall=sum(scores) / len(scores),
    )
