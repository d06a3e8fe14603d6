import pytest
from hypothesis import given, strategies as st

from opguide import (
    AnnotatedSegment,
    Level,
    TopKPrediction,
    TrainingCorpus,
    compose_action_label,
    compute_reference_times,
    derive_sequences,
)
from opguide.errors import EmptyToken, MissingReferenceTime


def seg(vid, verb, noun, start, end):
    return AnnotatedSegment(vid, verb, noun, start, end)


class TestComposeActionLabel:
    def test_take_bolt(self):
        assert compose_action_label("take", "bolt").text == "take_bolt"

    def test_align_objects(self):
        assert compose_action_label("align", "objects").text == "align_objects"

    def test_empty_component(self):
        with pytest.raises(EmptyToken):
            compose_action_label("screw", "")

    def test_whitespace_rejected(self):
        with pytest.raises(EmptyToken):
            compose_action_label("take", "two bolts")


class TestDeriveSequences:
    def test_verb_projection(self):
        corpus = TrainingCorpus.from_segments(
            [seg("v1", "take", "bolt", 0.0, 1.0), seg("v1", "put", "bolt", 1.0, 2.0)]
        )
        assert derive_sequences(corpus, Level.VERB) == [["take", "put"]]

    def test_action_projection(self):
        corpus = TrainingCorpus.from_segments(
            [seg("v1", "take", "bolt", 0.0, 1.0), seg("v1", "put", "bolt", 1.0, 2.0)]
        )
        assert derive_sequences(corpus, Level.ACTION) == [["take_bolt", "put_bolt"]]

    def test_no_cross_video_concatenation(self):
        segments = [
            seg("v1", "take", "bolt", 0.0, 1.0),
            seg("v1", "put", "bolt", 1.0, 2.0),
            seg("v2", "screw", "bolt", 0.0, 1.0),
            seg("v2", "take", "bar", 1.0, 2.0),
        ]
        corpus = TrainingCorpus.from_segments(segments)
        # oracle: group per video independently
        expected = {}
        for s in segments:
            expected.setdefault(s.video_id, []).append(s.label(Level.ACTION))
        assert derive_sequences(corpus, Level.ACTION) == [expected["v1"], expected["v2"]]

    def test_short_video_kept(self):
        corpus = TrainingCorpus.from_segments([seg("v1", "take", "bolt", 0.0, 1.0)])
        assert derive_sequences(corpus, Level.NOUN) == [["bolt"]]

    def test_segments_sorted_by_start(self):
        corpus = TrainingCorpus.from_segments(
            [seg("v1", "put", "bolt", 5.0, 6.0), seg("v1", "take", "bolt", 0.0, 1.0)]
        )
        assert derive_sequences(corpus, Level.VERB) == [["take", "put"]]

    def test_ordering_deterministic_under_permutation(self):
        segments = [
            seg("v1", "a", "x", 0.0, 1.0),
            seg("v1", "b", "x", 0.0, 1.5),
            seg("v1", "c", "x", 2.0, 3.0),
        ]
        corpus1 = TrainingCorpus.from_segments(segments)
        corpus2 = TrainingCorpus.from_segments(list(reversed(segments)))
        assert corpus1 == corpus2


class TestReferenceTimes:
    def test_odd_count_median(self):
        corpus = TrainingCorpus.from_segments(
            [
                seg("v1", "take", "bolt", 0.0, 1.0),
                seg("v1", "take", "bolt", 2.0, 4.0),
                seg("v1", "take", "bolt", 5.0, 15.0),
            ]
        )
        assert compute_reference_times(corpus, Level.ACTION).get("take_bolt") == 2.0

    def test_even_count_median_is_mean_of_central_pair(self):
        corpus = TrainingCorpus.from_segments(
            [seg("v1", "take", "bolt", 0.0, 1.0), seg("v1", "take", "bolt", 2.0, 5.0)]
        )
        assert compute_reference_times(corpus, Level.ACTION).get("take_bolt") == 2.0

    def test_unseen_label_missing(self):
        corpus = TrainingCorpus.from_segments([seg("v1", "take", "bolt", 0.0, 1.0)])
        times = compute_reference_times(corpus, Level.ACTION)
        with pytest.raises(MissingReferenceTime):
            times.get("put_bolt")

    @given(st.lists(st.floats(min_value=0.1, max_value=100.0), min_size=1, max_size=20))
    def test_median_robust_to_duplicating_median(self, durations):
        import statistics

        med = statistics.median(durations)
        assert statistics.median(durations + [med]) == pytest.approx(med)


class TestSegmentInvariants:
    def test_end_must_exceed_start(self):
        with pytest.raises(ValueError):
            seg("v1", "take", "bolt", 1.0, 1.0)

    def test_negative_start_rejected(self):
        with pytest.raises(ValueError):
            seg("v1", "take", "bolt", -1.0, 1.0)


class TestTopKPrediction:
    def test_duplicate_labels_rejected(self):
        with pytest.raises(ValueError):
            TopKPrediction(entries=(("a", 0.9), ("a", 0.8)))

    def test_ascending_scores_rejected(self):
        with pytest.raises(ValueError):
            TopKPrediction(entries=(("a", 0.5), ("b", 0.9)))

    def test_tie_requires_lexicographic_order(self):
        TopKPrediction(entries=(("a", 0.5), ("b", 0.5)))
        with pytest.raises(ValueError):
            TopKPrediction(entries=(("b", 0.5), ("a", 0.5)))

    def test_rank_of(self):
        pred = TopKPrediction(entries=(("x", 0.9), ("y", 0.4)))
        assert pred.rank_of("x") == 1
        assert pred.rank_of("y") == 2
        assert pred.rank_of("z") is None
