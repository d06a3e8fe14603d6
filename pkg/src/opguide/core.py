"""Domain types for labels, annotated segments, corpora, and reference durations.

Labels live at one of three levels: full actions (verb_noun composites),
bare verbs, or bare nouns. A training corpus is a set of per-video segment
lists; everything downstream (graph construction, reference times) is
derived from it at a chosen level.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass, field
from enum import Enum

from .errors import EmptyToken, MissingReferenceTime


class Level(str, Enum):
    ACTION = "action"
    VERB = "verb"
    NOUN = "noun"


def validate_token(text: str) -> str:
    """Reject empty tokens and tokens that would break line/CSV formats."""
    if not text:
        raise EmptyToken("empty label token")
    if any(ch in text for ch in (",", "\n", "\r")) or any(ch.isspace() for ch in text):
        raise EmptyToken(f"label token {text!r} contains whitespace or separators")
    return text


@dataclass(frozen=True)
class ActionLabel:
    level: Level
    text: str

    def __post_init__(self):
        validate_token(self.text)
        if self.level is Level.ACTION and "_" not in self.text:
            raise EmptyToken(f"action-level label {self.text!r} is not a verb_noun composite")


def compose_action_label(verb: str, noun: str) -> ActionLabel:
    """Join a verb and noun into the underscore composite used for full actions."""
    validate_token(verb)
    validate_token(noun)
    return ActionLabel(Level.ACTION, f"{verb}_{noun}")


@dataclass(frozen=True)
class AnnotatedSegment:
    video_id: str
    verb: str
    noun: str
    start_s: float
    end_s: float

    def __post_init__(self):
        validate_token(self.verb)
        validate_token(self.noun)
        if not (math.isfinite(self.start_s) and math.isfinite(self.end_s)):
            raise ValueError("segment times must be finite")
        if self.start_s < 0:
            raise ValueError("start_s must be non-negative")
        if self.end_s <= self.start_s:
            raise ValueError("end_s must exceed start_s")

    @property
    def duration(self) -> float:
        return self.end_s - self.start_s

    def label(self, level: Level) -> str:
        if level is Level.VERB:
            return self.verb
        if level is Level.NOUN:
            return self.noun
        return f"{self.verb}_{self.noun}"


def _segment_sort_key(seg: AnnotatedSegment):
    return (seg.start_s, seg.end_s, seg.label(Level.ACTION))


@dataclass(frozen=True)
class TrainingCorpus:
    """Per-video ordered segment lists; one video is one realization of the chain."""

    videos: dict[str, tuple[AnnotatedSegment, ...]]

    @classmethod
    def from_segments(cls, segments: list[AnnotatedSegment]) -> "TrainingCorpus":
        videos: dict[str, list[AnnotatedSegment]] = {}
        for seg in segments:
            videos.setdefault(seg.video_id, []).append(seg)
        ordered = {
            vid: tuple(sorted(segs, key=_segment_sort_key))
            for vid, segs in sorted(videos.items())
        }
        return cls(videos=ordered)

    def __len__(self) -> int:
        return sum(len(v) for v in self.videos.values())


def derive_sequences(corpus: TrainingCorpus, level: Level) -> list[list[str]]:
    """One label sequence per video, in segment time order.

    Videos with fewer than two segments are kept; they simply contribute no
    transitions downstream.
    """
    return [
        [seg.label(level) for seg in segs]
        for _, segs in sorted(corpus.videos.items())
    ]


def vocabulary(corpus: TrainingCorpus, level: Level) -> set[str]:
    return {seg.label(level) for segs in corpus.videos.values() for seg in segs}


@dataclass(frozen=True)
class ActionDictionary:
    """Set of context-valid labels gating both graph and model candidates."""

    level: Level
    members: frozenset[str] = field(default_factory=frozenset)

    def __contains__(self, label: str) -> bool:
        return label in self.members


@dataclass(frozen=True)
class TopKPrediction:
    """Ordered Top-k (label, score) list from an anticipation source, k <= 5."""

    entries: tuple[tuple[str, float], ...]

    def __post_init__(self):
        if not 1 <= len(self.entries) <= 5:
            raise ValueError("prediction must hold between 1 and 5 entries")
        labels = [lbl for lbl, _ in self.entries]
        if len(set(labels)) != len(labels):
            raise ValueError("prediction labels must be distinct")
        keys = [(-score, lbl) for lbl, score in self.entries]
        if any(a >= b for a, b in zip(keys, keys[1:])):
            raise ValueError("prediction entries must be score-descending with lexicographic tie-break")

    @property
    def labels(self) -> list[str]:
        return [lbl for lbl, _ in self.entries]

    def rank_of(self, label: str) -> int | None:
        """1-based position of label, None if absent."""
        for i, (lbl, _) in enumerate(self.entries, start=1):
            if lbl == label:
                return i
        return None


@dataclass(frozen=True)
class ReferenceTimes:
    """Per-label median durations, the efficiency benchmark for TWSA."""

    level: Level
    medians: dict[str, float]

    def get(self, label: str) -> float:
        try:
            return self.medians[label]
        except KeyError:
            raise MissingReferenceTime(label) from None


def compute_reference_times(corpus: TrainingCorpus, level: Level) -> ReferenceTimes:
    """Median observed duration per label; even counts take the mean of the central pair."""
    durations: dict[str, list[float]] = {}
    for segs in corpus.videos.values():
        for seg in segs:
            durations.setdefault(seg.label(level), []).append(seg.duration)
    medians = {lbl: float(statistics.median(vals)) for lbl, vals in sorted(durations.items())}
    return ReferenceTimes(level=level, medians=medians)
