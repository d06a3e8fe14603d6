"""Regenerates the bundled synthetic corpus and its golden outputs.

Run from the repository root:

    python3 scripts/generate_fixtures.py

Inputs are fully deterministic, so reruns must be byte-identical to the
committed files; the CLI golden test enforces exactly that.
"""

import random
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
GOLDEN = DATA / "golden"

sys.path.insert(0, str(ROOT / "src"))

from opguide import (  # noqa: E402
    Level,
    compute_reference_times,
    deserialize_graph,
    topk_next,
)
from opguide.io import write_session  # noqa: E402
from opguide.twsa import StepRecord  # noqa: E402

VIDEOS = {
    "v01": [
        ("take", "bolt"), ("align", "objects"), ("screw", "bolt"),
        ("take", "bar"), ("put", "bar"), ("align", "objects"), ("screw", "bolt"),
    ],
    "v02": [
        ("take", "bolt"), ("put", "bolt"), ("take", "bar"), ("align", "objects"),
        ("screw", "bolt"), ("take", "bolt"), ("align", "objects"),
    ],
    "v03": [
        ("take", "bar"), ("align", "objects"), ("screw", "bolt"), ("take", "bolt"),
        ("put", "bolt"), ("align", "objects"), ("screw", "bolt"),
    ],
}

# Per-step durations in seconds, cycled per video to vary the medians.
DURATIONS = {
    "v01": [1.5, 2.0, 4.0, 1.0, 1.5, 2.5, 3.5],
    "v02": [2.0, 1.0, 1.5, 2.0, 5.0, 1.5, 3.0],
    "v03": [1.0, 3.0, 4.5, 2.5, 1.5, 2.0, 4.0],
}

SCORE_SEQUENCE = [
    "take_bolt", "align_objects", "screw_bolt", "take_bolt", "put_bolt",
    "take_bar", "put_bar", "align_objects", "put_bolt", "align_objects",
    "screw_bolt", "take_bar",
]


def write_annotations():
    lines = ["video_id,verb,noun,start_s,end_s"]
    for vid, steps in VIDEOS.items():
        t = 0.0
        for (verb, noun), dur in zip(steps, DURATIONS[vid]):
            lines.append(f"{vid},{verb},{noun},{t:.12g},{t + dur:.12g}")
            t += dur
    (DATA / "annotations.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_score_sequence():
    (DATA / "score_sequence.txt").write_text(
        "\n".join(SCORE_SEQUENCE) + "\n", encoding="utf-8"
    )


def write_dictionary(graph):
    (DATA / "dictionary.txt").write_text(
        "# full action vocabulary\n" + "\n".join(graph.vocab) + "\n", encoding="utf-8"
    )


def write_prediction_file():
    rec = (
        '{"step": 0, "topk": [{"label": "align_objects", "score": 0.61}, '
        '{"label": "screw_bolt", "score": 0.22}, {"label": "put_bolt", "score": 0.09}, '
        '{"label": "take_bar", "score": 0.05}, {"label": "put_bar", "score": 0.03}]}'
    )
    (DATA / "predictions.jsonl").write_text(rec + "\n", encoding="utf-8")


def write_session_file(graph, times):
    """50-step seeded walk; durations cycle around the label's median."""
    rng = random.Random(20240817)
    factors = [0.8, 1.0, 1.3, 2.0, 0.6]
    state = "take_bolt"
    records = []
    for i in range(50):
        row = topk_next(graph, state, 5)
        labels = [lbl for lbl, _ in row]
        # mostly follow the graph, sometimes jump anywhere in the vocabulary
        if rng.random() < 0.85:
            label = labels[min(int(rng.random() * len(labels)), len(labels) - 1)]
        else:
            label = graph.vocab[rng.randrange(len(graph.vocab))]
        duration = round(times.get(label) * factors[i % len(factors)], 6)
        records.append(StepRecord(label=label, duration_s=duration, recommended=tuple(labels)))
        if topk_next(graph, label, 1):
            state = label
    (DATA / "session.jsonl").write_text(write_session(records), encoding="utf-8")


def run_cli(*args):
    subprocess.run(
        [sys.executable, "-m", "opguide.cli", *args],
        check=True,
        cwd=ROOT,
        env={"PYTHONPATH": str(ROOT / "src"), "PATH": "/usr/bin:/bin"},
    )


def main():
    DATA.mkdir(exist_ok=True)
    GOLDEN.mkdir(exist_ok=True)
    write_annotations()
    write_score_sequence()
    write_prediction_file()

    run_cli(
        "build-graph", "--annotations", str(DATA / "annotations.csv"),
        "--level", "action", "--out", str(GOLDEN / "graph_action.json"),
    )
    graph = deserialize_graph((GOLDEN / "graph_action.json").read_text(encoding="utf-8"))
    write_dictionary(graph)

    from opguide.io import parse_annotations

    corpus = parse_annotations((DATA / "annotations.csv").read_text(encoding="utf-8"))
    times = compute_reference_times(corpus, Level.ACTION)
    write_session_file(graph, times)

    run_cli(
        "score", "--graph", str(GOLDEN / "graph_action.json"),
        "--sequence", str(DATA / "score_sequence.txt"),
        "--out", str(GOLDEN / "score_report.jsonl"),
    )
    run_cli(
        "twsa", "--graph", str(GOLDEN / "graph_action.json"),
        "--annotations", str(DATA / "annotations.csv"),
        "--session", str(DATA / "session.jsonl"),
        "--out", str(GOLDEN / "twsa_report.json"),
    )
    print("fixtures written to", DATA)


if __name__ == "__main__":
    main()
