import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from opguide import (
    Level,
    build_reference_graph,
    deserialize_graph,
    row_entropy,
    serialize_graph,
    transition_row,
)
from opguide.errors import EmptyGraph, MalformedGraphFile

from conftest import graph_from_counts, random_counts


class TestBuild:
    def test_single_transition(self):
        g = build_reference_graph([["A", "B"]])
        assert g.total_transitions == 1
        assert g.counts == {("A", "B"): 1}
        assert g.weight("A", "B") == 1.0

    def test_derived_counts(self, fixture_graph, fixture_counts):
        # oracle: pair counts accumulated by conftest's hand-rolled loop
        assert fixture_graph.counts == fixture_counts
        assert fixture_graph.total_transitions == 8
        assert fixture_graph.weight("A", "B") == pytest.approx(3 / 8, abs=1e-12)

    def test_no_pairs_raises(self):
        with pytest.raises(EmptyGraph):
            build_reference_graph([["A"], ["B"]])

    def test_weights_sum_to_one(self, fixture_graph):
        total = sum(
            fixture_graph.weight(src, dst) for src, dst in fixture_graph.counts
        )
        assert total == pytest.approx(1.0, abs=1e-9)


class TestTransitionRow:
    def test_row_b(self, fixture_graph):
        row = transition_row(fixture_graph, "B")
        assert row.successors == (
            ("C", 2, pytest.approx(2 / 3)),
            ("D", 1, pytest.approx(1 / 3)),
        )

    def test_single_successor(self, fixture_graph):
        row = transition_row(fixture_graph, "D")
        assert row.successors == (("A", 1, 1.0),)

    def test_unknown_state_empty(self, fixture_graph):
        assert transition_row(fixture_graph, "Z").successors == ()

    def test_row_probabilities_sum_to_one(self, fixture_graph):
        for state in fixture_graph.vocab:
            row = transition_row(fixture_graph, state)
            if row.successors:
                assert sum(p for _, _, p in row.successors) == pytest.approx(1.0, abs=1e-9)


class TestRowEntropy:
    def test_degenerate(self, fixture_graph):
        assert row_entropy(transition_row(fixture_graph, "D")) == 0.0

    def test_two_thirds_one_third(self, fixture_graph):
        # oracle: -sum p ln p evaluated directly
        expected = -(2 / 3) * math.log(2 / 3) - (1 / 3) * math.log(1 / 3)
        assert row_entropy(transition_row(fixture_graph, "B")) == pytest.approx(
            expected, abs=1e-12
        )
        assert expected == pytest.approx(0.636514, abs=1e-6)

    def test_uniform_four(self):
        g = build_reference_graph([["S", "A", "S", "B", "S", "C", "S", "D"]])
        assert row_entropy(transition_row(g, "S")) == pytest.approx(math.log(4), abs=1e-12)

    def test_empty_row_zero(self, fixture_graph):
        assert row_entropy(transition_row(fixture_graph, "Z")) == 0.0

    def test_bounded_by_log_support(self):
        rng = random.Random(7)
        for _ in range(50):
            _, counts = random_counts(rng)
            g = graph_from_counts(counts)
            for state in g.vocab:
                row = transition_row(g, state)
                if row.successors:
                    h = row_entropy(row)
                    assert -1e-12 <= h <= math.log(len(row.successors)) + 1e-12


class TestSerialization:
    def test_round_trip(self, fixture_graph):
        assert deserialize_graph(serialize_graph(fixture_graph)) == fixture_graph

    def test_rebuild_determinism(self, fixture_graph):
        g2 = build_reference_graph([["A", "B", "C", "A", "B", "D", "A", "B", "C"]])
        assert serialize_graph(fixture_graph) == serialize_graph(g2)

    def test_truncated_stream(self, fixture_graph):
        text = serialize_graph(fixture_graph)
        with pytest.raises(MalformedGraphFile):
            deserialize_graph(text[: len(text) // 2])

    def test_hand_written_minimal_file(self):
        text = (
            '{"edges": [{"count": 1, "dst": "put_bolt", "src": "take_bolt", '
            '"weight": 1.0}], "level": "action", "total_transitions": 1, '
            '"vocab": ["put_bolt", "take_bolt"]}'
        )
        g = deserialize_graph(text)
        assert g.total_transitions == 1
        assert g.counts == {("take_bolt", "put_bolt"): 1}

    def test_inconsistent_weight_rejected(self):
        text = (
            '{"edges": [{"count": 1, "dst": "b", "src": "a", "weight": 0.5}], '
            '"level": "action", "total_transitions": 1, "vocab": ["a", "b"]}'
        )
        with pytest.raises(MalformedGraphFile):
            deserialize_graph(text)

    def test_random_round_trips(self):
        rng = random.Random(11)
        for _ in range(30):
            _, counts = random_counts(rng)
            g = graph_from_counts(counts)
            assert deserialize_graph(serialize_graph(g)) == g


class TestCountScaling:
    @given(st.integers(min_value=2, max_value=9), st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=60, deadline=None)
    def test_scaling_preserves_rows_and_entropy(self, m, seed):
        rng = random.Random(seed)
        _, counts = random_counts(rng)
        g = graph_from_counts(counts)
        scaled = graph_from_counts({e: c * m for e, c in counts.items()})
        for state in g.vocab:
            row = transition_row(g, state)
            row_m = transition_row(scaled, state)
            assert row.labels == row_m.labels
            for (_, _, p), (_, _, pm) in zip(row.successors, row_m.successors):
                assert p == pytest.approx(pm, abs=1e-12)
            assert row_entropy(row) == pytest.approx(row_entropy(row_m), abs=1e-12)
