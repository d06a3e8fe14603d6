"""In-memory live sessions: one observation loop per operator run.

Each observed (label, duration) pair is assessed against the reference
graph, scored for time-weighted accuracy against the previous state's
Top-k recommendation, and answered with guidance for the new state.
Repeat guidance freezes the Markov state until an observation resolves it.
"""

from __future__ import annotations

import random
import threading
import uuid
from dataclasses import dataclass, field

from .anomaly import AnomalyConfig, StepAssessment, assess_transition, topk_next
from .core import ActionDictionary, ReferenceTimes, TopKPrediction
from .errors import (
    NonPositiveDuration,
    UnknownDictionary,
    UnknownGraph,
    UnknownLabel,
    UnknownSession,
    UnknownState,
)
from .graph import ReferenceGraph, transition_row
from .guidance import GuidanceOutcome, Repeat, recommend_next
from .twsa import StepRecord, TwsaMode, step_twsa


@dataclass(frozen=True)
class HistoryEntry:
    record: StepRecord
    assessment: StepAssessment
    guidance: GuidanceOutcome
    guidance_warning: bool  # set when the new state had no successors at all
    step_twsa: float
    running_twsa: float


@dataclass
class Session:
    id: str
    graph: ReferenceGraph
    dictionary: ActionDictionary
    reference_times: ReferenceTimes
    config: AnomalyConfig
    twsa_mode: TwsaMode
    current_state: str
    history: list[HistoryEntry] = field(default_factory=list)
    pending_repeat: bool = False
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def running_twsa(self) -> float:
        if not self.history:
            return 0.0
        return sum(e.step_twsa for e in self.history) / len(self.history)


def _row_prediction(graph: ReferenceGraph, state: str, k: int) -> TopKPrediction | None:
    entries = topk_next(graph, state, min(k, 5))
    if not entries:
        return None
    return TopKPrediction(entries=entries)


class SessionManager:
    """Registry of graphs, dictionaries, reference times, and live sessions."""

    def __init__(self):
        self.graphs: dict[str, ReferenceGraph] = {}
        self.dictionaries: dict[str, ActionDictionary] = {}
        self.reference_times: dict[str, ReferenceTimes] = {}
        self.sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def add_graph(self, graph_id: str, graph: ReferenceGraph,
                  times: ReferenceTimes | None = None):
        self.graphs[graph_id] = graph
        if times is not None:
            self.reference_times[graph_id] = times

    def add_dictionary(self, dict_id: str, dictionary: ActionDictionary):
        self.dictionaries[dict_id] = dictionary

    def get_graph(self, graph_id: str) -> ReferenceGraph:
        try:
            return self.graphs[graph_id]
        except KeyError:
            raise UnknownGraph(f"no graph {graph_id!r}") from None

    def get_session(self, session_id: str) -> Session:
        try:
            return self.sessions[session_id]
        except KeyError:
            raise UnknownSession(f"no session {session_id!r}") from None

    def create_session(
        self,
        graph_id: str,
        dictionary_id: str | None = None,
        initial_state: str | None = None,
        config: AnomalyConfig = AnomalyConfig(),
        twsa_mode: TwsaMode = TwsaMode.TOP5_MEMBERSHIP,
        seed: int = 0,
    ) -> Session:
        graph = self.get_graph(graph_id)
        if dictionary_id is None:
            dictionary = ActionDictionary(level=graph.level, members=frozenset(graph.vocab))
        else:
            try:
                dictionary = self.dictionaries[dictionary_id]
            except KeyError:
                raise UnknownDictionary(f"no dictionary {dictionary_id!r}") from None
        if initial_state is None:
            starts = [v for v in graph.vocab if transition_row(graph, v).successors]
            initial_state = starts[random.Random(seed).randrange(len(starts))]
        elif initial_state not in graph.vocab:
            raise UnknownLabel(f"initial state {initial_state!r} not in vocabulary")
        times = self.reference_times.get(graph_id, ReferenceTimes(graph.level, {}))
        session = Session(
            id=uuid.uuid4().hex,
            graph=graph,
            dictionary=dictionary,
            reference_times=times,
            config=config,
            twsa_mode=twsa_mode,
            current_state=initial_state,
        )
        with self._lock:
            self.sessions[session.id] = session
        return session

    def observe(self, session_id: str, label: str, duration_s: float) -> HistoryEntry:
        session = self.get_session(session_id)
        with session.lock:
            return _observe_locked(session, label, duration_s)


def _observe_locked(session: Session, label: str, duration_s: float) -> HistoryEntry:
    graph = session.graph
    if label not in graph.vocab:
        raise UnknownLabel(f"label {label!r} not in vocabulary")
    if duration_s <= 0:
        raise NonPositiveDuration(f"duration must be positive, got {duration_s}")

    state = session.current_state
    assessment = assess_transition(graph, state, label, session.config)
    recommended = tuple(lbl for lbl, _ in topk_next(graph, state, session.config.k))
    record = StepRecord(label=label, duration_s=duration_s, recommended=recommended)
    score = step_twsa(session.reference_times.get(label), duration_s, label in recommended)

    warning = False
    prediction = _row_prediction(graph, label, session.config.k)
    if prediction is None:
        guidance: GuidanceOutcome = Repeat(suggestions=())
        warning = True
    else:
        try:
            guidance = recommend_next(graph, label, prediction, session.dictionary)
        except UnknownState:
            guidance = Repeat(suggestions=())
            warning = True

    if isinstance(guidance, Repeat):
        session.pending_repeat = True  # state frozen; next observation re-enters here
    else:
        session.pending_repeat = False
        session.current_state = label

    n = len(session.history)
    running = (sum(e.step_twsa for e in session.history) + score) / (n + 1)
    entry = HistoryEntry(
        record=record,
        assessment=assessment,
        guidance=guidance,
        guidance_warning=warning,
        step_twsa=score,
        running_twsa=running,
    )
    session.history.append(entry)
    return entry
