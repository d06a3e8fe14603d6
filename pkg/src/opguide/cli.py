"""Command-line surface tying the pipeline together.

Subcommands: build-graph, score, guide, twsa, simulate, serve.
Exit status: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .anomaly import AnomalyConfig, Factor2Mode, assess_sequence
from .core import (
    ActionDictionary,
    Level,
    compute_reference_times,
    derive_sequences,
)
from .errors import DomainError
from .graph import build_reference_graph, deserialize_graph, serialize_graph
from .guidance import Recommend, recommend_next
from .predictor import sample_episode
from .session import SessionManager
from .twsa import TwsaMode, evaluate_session


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="opguide")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-graph", help="build a reference graph from annotations")
    p.add_argument("--annotations", required=True, help="annotation CSV file")
    p.add_argument("--level", choices=[l.value for l in Level], default="action")
    p.add_argument("--out", required=True, help="output graph file")

    p = sub.add_parser("score", help="anomaly-score a label sequence against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--sequence", required=True, help="one label per line")
    p.add_argument("--no-certainty", action="store_true")
    p.add_argument("--literal-factor2", action="store_true")
    p.add_argument("--out", required=True, help="output report file")

    p = sub.add_parser("guide", help="recommend the next action for a state")
    p.add_argument("--graph", required=True)
    p.add_argument("--predictions", required=True, help="prediction stream file; first record used")
    p.add_argument("--dictionary", required=True)
    p.add_argument("--state", required=True)

    p = sub.add_parser("twsa", help="evaluate a session's time-weighted accuracy")
    p.add_argument("--graph", required=True)
    p.add_argument("--annotations", required=True, help="training annotations for reference times")
    p.add_argument("--session", required=True, help="session record file")
    p.add_argument("--mode", choices=["top5", "strict"], default="top5")
    p.add_argument("--expected", help="expected sequence file (strict mode)")
    p.add_argument("--out", help="output report file (default stdout)")

    p = sub.add_parser("simulate", help="sample an episode from the graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)

    p = sub.add_parser("serve", help="run the session service")
    p.add_argument("--graph", required=True)
    p.add_argument("--annotations", help="training annotations for reference times")
    p.add_argument("--dictionary", help="dictionary file (default: full vocabulary)")
    p.add_argument("--console", help="built console bundle directory to serve at /")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _load_graph(path: str):
    return deserialize_graph(Path(path).read_text(encoding="utf-8"))


def _cmd_build_graph(args) -> int:
    corpus = io.parse_annotations(Path(args.annotations).read_text(encoding="utf-8"))
    level = Level(args.level)
    graph = build_reference_graph(derive_sequences(corpus, level), level)
    Path(args.out).write_text(serialize_graph(graph), encoding="utf-8")
    return 0


def _cmd_score(args) -> int:
    graph = _load_graph(args.graph)
    sequence = io.parse_sequence(Path(args.sequence).read_text(encoding="utf-8"))
    config = AnomalyConfig(
        use_certainty=not args.no_certainty,
        factor2_mode=Factor2Mode.LITERAL if args.literal_factor2 else Factor2Mode.CORRECTED,
    )
    report = assess_sequence(graph, sequence, config)
    Path(args.out).write_text(io.write_score_report(list(report.full_trace)), encoding="utf-8")
    return 0


def _cmd_guide(args) -> int:
    graph = _load_graph(args.graph)
    predictions = io.parse_predictions(Path(args.predictions).read_text(encoding="utf-8"))
    dictionary = io.parse_dictionary(
        Path(args.dictionary).read_text(encoding="utf-8"), graph.level
    )
    outcome = recommend_next(graph, args.state, predictions[0], dictionary)
    if isinstance(outcome, Recommend):
        doc = {
            "variant": "recommend",
            "label": outcome.label,
            "graph_rank": outcome.graph_rank,
            "model_rank": outcome.model_rank,
            "rank_sum": outcome.rank_sum,
        }
    else:
        doc = {
            "variant": "repeat",
            "suggestions": [{"label": lbl, "p": io.sig9(p)} for lbl, p in outcome.suggestions],
        }
    print(json.dumps(doc, sort_keys=True))
    return 0


def _cmd_twsa(args) -> int:
    graph = _load_graph(args.graph)
    corpus = io.parse_annotations(Path(args.annotations).read_text(encoding="utf-8"))
    times = compute_reference_times(corpus, graph.level)
    records = io.parse_session(Path(args.session).read_text(encoding="utf-8"))
    mode = TwsaMode.STRICT_SEQUENCE if args.mode == "strict" else TwsaMode.TOP5_MEMBERSHIP
    expected = None
    if args.expected:
        expected = io.parse_sequence(Path(args.expected).read_text(encoding="utf-8"))
    if mode is TwsaMode.STRICT_SEQUENCE and expected is None:
        print("error: --expected is required with --mode strict", file=sys.stderr)
        return 2
    report = evaluate_session(records, times, mode, expected)
    text = io.write_twsa_report(report)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_simulate(args) -> int:
    graph = _load_graph(args.graph)
    episode = sample_episode(graph, args.steps, args.seed)
    sys.stdout.write(io.write_sequence(episode))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    graph = _load_graph(args.graph)
    manager = SessionManager()
    times = None
    if args.annotations:
        corpus = io.parse_annotations(Path(args.annotations).read_text(encoding="utf-8"))
        times = compute_reference_times(corpus, graph.level)
    manager.add_graph("default", graph, times)
    if args.dictionary:
        dictionary = io.parse_dictionary(
            Path(args.dictionary).read_text(encoding="utf-8"), graph.level
        )
        manager.add_dictionary("default", dictionary)
    app = create_app(manager, console_dir=args.console)
    uvicorn.run(app, host="127.0.0.1", port=args.port)
    return 0


_COMMANDS = {
    "build-graph": _cmd_build_graph,
    "score": _cmd_score,
    "guide": _cmd_guide,
    "twsa": _cmd_twsa,
    "simulate": _cmd_simulate,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
