"""Operator guidance, anomaly scoring, and efficiency metrics for assembly workflows."""

from .anomaly import (
    AnomalyConfig,
    AnomalyReport,
    Factor2Mode,
    StepAssessment,
    assess_sequence,
    assess_transition,
    observed_certainty,
    topk_next,
)
from .core import (
    ActionDictionary,
    ActionLabel,
    AnnotatedSegment,
    Level,
    ReferenceTimes,
    TopKPrediction,
    TrainingCorpus,
    compose_action_label,
    compute_reference_times,
    derive_sequences,
)
from .graph import (
    ReferenceGraph,
    TransitionRow,
    build_reference_graph,
    deserialize_graph,
    row_entropy,
    serialize_graph,
    transition_row,
)
from .guidance import GuidanceOutcome, Recommend, Repeat, recommend_next
from .predictor import FileReplay, MarkovSampler, NoisyOracle, sample_episode
from .session import SessionManager
from .twsa import StepRecord, TwsaMode, TwsaReport, evaluate_session, step_twsa

__all__ = [
    "ActionDictionary",
    "ActionLabel",
    "AnnotatedSegment",
    "AnomalyConfig",
    "AnomalyReport",
    "Factor2Mode",
    "FileReplay",
    "GuidanceOutcome",
    "Level",
    "MarkovSampler",
    "NoisyOracle",
    "Recommend",
    "ReferenceGraph",
    "ReferenceTimes",
    "Repeat",
    "SessionManager",
    "StepAssessment",
    "StepRecord",
    "TopKPrediction",
    "TrainingCorpus",
    "TransitionRow",
    "TwsaMode",
    "TwsaReport",
    "assess_sequence",
    "assess_transition",
    "build_reference_graph",
    "compose_action_label",
    "compute_reference_times",
    "derive_sequences",
    "deserialize_graph",
    "evaluate_session",
    "observed_certainty",
    "recommend_next",
    "row_entropy",
    "sample_episode",
    "serialize_graph",
    "step_twsa",
    "topk_next",
    "transition_row",
]
