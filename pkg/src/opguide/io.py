"""File formats: annotation CSV, dictionaries, sequences, predictions,
sessions, and anomaly/TWSA reports.

All writers are canonical: fixed key order, fixed float precision, newline-
terminated, so identical inputs produce byte-identical files.
"""

from __future__ import annotations

import csv
import io as _io
import json

from .anomaly import StepAssessment
from .core import (
    ActionDictionary,
    AnnotatedSegment,
    Level,
    TopKPrediction,
    TrainingCorpus,
)
from .errors import EmptyToken, MalformedPrediction, MalformedRow
from .twsa import StepRecord, TwsaReport

ANNOTATION_HEADER = ["video_id", "verb", "noun", "start_s", "end_s"]


def sig9(x: float) -> float:
    """Round to 9 significant digits for report output."""
    return float(f"{x:.9g}")


# -- annotations -------------------------------------------------------------

def parse_annotations(text: str) -> TrainingCorpus:
    reader = csv.reader(_io.StringIO(text))
    rows = list(reader)
    if not rows or rows[0] != ANNOTATION_HEADER:
        raise MalformedRow(1, f"expected header {','.join(ANNOTATION_HEADER)}")
    segments = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != 5:
            raise MalformedRow(lineno, f"expected 5 columns, got {len(row)}")
        video_id, verb, noun, start_raw, end_raw = row
        try:
            start_s, end_s = float(start_raw), float(end_raw)
        except ValueError:
            raise MalformedRow(lineno, "non-numeric time") from None
        try:
            segments.append(AnnotatedSegment(video_id, verb, noun, start_s, end_s))
        except (ValueError, EmptyToken) as exc:
            raise MalformedRow(lineno, str(exc)) from None
    if not segments:
        raise MalformedRow(1, "no data rows")
    return TrainingCorpus.from_segments(segments)


def write_annotations(corpus: TrainingCorpus) -> str:
    out = [",".join(ANNOTATION_HEADER)]
    for vid, segs in sorted(corpus.videos.items()):
        for seg in segs:
            out.append(f"{vid},{seg.verb},{seg.noun},{seg.start_s:.12g},{seg.end_s:.12g}")
    return "\n".join(out) + "\n"


# -- dictionaries ------------------------------------------------------------

def parse_dictionary(text: str, level: Level) -> ActionDictionary:
    """One label per line; blank lines and # comments ignored."""
    members = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            members.add(line)
    return ActionDictionary(level=level, members=frozenset(members))


def write_dictionary(dictionary: ActionDictionary) -> str:
    return "\n".join(sorted(dictionary.members)) + "\n"


# -- label sequences ---------------------------------------------------------

def parse_sequence(text: str) -> list[str]:
    return [line.strip() for line in text.splitlines() if line.strip()]


def write_sequence(labels: list[str]) -> str:
    return "\n".join(labels) + "\n"


# -- predictions -------------------------------------------------------------

def parse_predictions(text: str) -> list[TopKPrediction]:
    """Line-delimited {step, topk: [{label, score}]}; scores strictly descending."""
    predictions = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError:
            raise MalformedPrediction(lineno, "not valid JSON") from None
        topk = rec.get("topk")
        if not isinstance(topk, list) or not topk:
            raise MalformedPrediction(lineno, "missing or empty topk array")
        entries = []
        for item in topk:
            if not isinstance(item, dict) or "label" not in item or "score" not in item:
                raise MalformedPrediction(lineno, "entry missing label or score")
            entries.append((item["label"], float(item["score"])))
        scores = [s for _, s in entries]
        if any(a <= b for a, b in zip(scores, scores[1:])):
            raise MalformedPrediction(lineno, "scores must be strictly descending")
        labels = [lbl for lbl, _ in entries]
        if len(set(labels)) != len(labels):
            raise MalformedPrediction(lineno, "duplicate labels in record")
        try:
            predictions.append(TopKPrediction(entries=tuple(entries)))
        except ValueError as exc:
            raise MalformedPrediction(lineno, str(exc)) from None
    if not predictions:
        raise MalformedPrediction(1, "no prediction records")
    return predictions


def write_predictions(predictions: list[TopKPrediction]) -> str:
    lines = []
    for step, pred in enumerate(predictions):
        doc = {
            "step": step,
            "topk": [{"label": lbl, "score": sig9(score)} for lbl, score in pred.entries],
        }
        lines.append(json.dumps(doc, sort_keys=True))
    return "\n".join(lines) + "\n"


# -- sessions ----------------------------------------------------------------

def parse_session(text: str) -> list[StepRecord]:
    """Line-delimited {label, duration_s, recommended: [labels]}."""
    records = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError:
            raise MalformedRow(lineno, "not valid JSON") from None
        try:
            records.append(
                StepRecord(
                    label=rec["label"],
                    duration_s=float(rec["duration_s"]),
                    recommended=tuple(rec.get("recommended", [])),
                )
            )
        except KeyError as exc:
            raise MalformedRow(lineno, f"missing field {exc.args[0]!r}") from None
    if not records:
        raise MalformedRow(1, "no session records")
    return records


def write_session(records: list[StepRecord]) -> str:
    lines = []
    for rec in records:
        doc = {
            "duration_s": sig9(rec.duration_s),
            "label": rec.label,
            "recommended": list(rec.recommended),
        }
        lines.append(json.dumps(doc, sort_keys=True))
    return "\n".join(lines) + "\n"


# -- anomaly score reports ---------------------------------------------------

def assessment_to_record(index: int, a: StepAssessment) -> dict:
    return {
        "a": sig9(a.score),
        "H": sig9(a.entropy),
        "c": sig9(a.certainty),
        "index": index,
        "observed": a.observed,
        "p": sig9(a.probability),
        "r": a.rank,
        "state": a.state,
        "suggestions": [{"label": lbl, "p": sig9(p)} for lbl, p in a.suggestions],
        "unknown_state": a.unknown_state,
    }


def write_score_report(trace: list[StepAssessment]) -> str:
    lines = [
        json.dumps(assessment_to_record(i, a), sort_keys=True)
        for i, a in enumerate(trace)
    ]
    return "\n".join(lines) + "\n"


def parse_score_report(text: str) -> list[dict]:
    return [json.loads(line) for line in text.splitlines() if line.strip()]


# -- TWSA reports ------------------------------------------------------------

def twsa_report_to_doc(report: TwsaReport) -> dict:
    return {
        "class_stats": {
            lbl: {
                "max": sig9(cs.maximum),
                "median": sig9(cs.median),
                "min": sig9(cs.minimum),
                "outliers": [sig9(v) for v in cs.outliers],
                "q1": sig9(cs.q1),
                "q3": sig9(cs.q3),
            }
            for lbl, cs in report.class_stats.items()
        },
        "overall": sig9(report.overall),
        "step_scores": [sig9(s) for s in report.step_scores],
    }


def write_twsa_report(report: TwsaReport) -> str:
    return json.dumps(twsa_report_to_doc(report), sort_keys=True, indent=2) + "\n"
