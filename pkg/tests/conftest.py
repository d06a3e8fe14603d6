import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from opguide import Level, build_reference_graph

FIXTURE_SEQUENCE = ["A", "B", "C", "A", "B", "D", "A", "B", "C"]
DATA_DIR = Path(__file__).parent.parent / "data"


@pytest.fixture
def fixture_graph():
    return build_reference_graph([FIXTURE_SEQUENCE], Level.ACTION)


@pytest.fixture
def fixture_counts():
    counts = {}
    for src, dst in zip(FIXTURE_SEQUENCE, FIXTURE_SEQUENCE[1:]):
        counts[(src, dst)] = counts.get((src, dst), 0) + 1
    return counts


def random_counts(rng: random.Random, max_nodes: int = 12, max_count: int = 20):
    """Random edge-count dict over a small vocabulary; at least one edge."""
    n = rng.randint(2, max_nodes)
    nodes = [f"n{i:02d}" for i in range(n)]
    counts = {}
    for src in nodes:
        for dst in nodes:
            if rng.random() < 0.35:
                counts[(src, dst)] = rng.randint(1, max_count)
    if not counts:
        src, dst = rng.sample(nodes, 2)
        counts[(src, dst)] = rng.randint(1, max_count)
    return nodes, counts


def graph_from_counts(counts):
    sequences = []
    for (src, dst), count in counts.items():
        sequences.extend([[src, dst]] * count)
    return build_reference_graph(sequences, Level.ACTION)
