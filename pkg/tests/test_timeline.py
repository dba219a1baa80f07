import random

import pytest

from vislog.errors import UnknownUser, VisitOutOfRange
from vislog.event_model import EventCategory, ViewKind
from vislog.sessionizer import StitchParams, resolve_corpus
from vislog.timeline import ViewSegment, build_timeline, merge_blocks, view_segments

PARAMS = StitchParams()


def events_of(ev, names_and_ts):
    return [ev(name, ts) for name, ts in names_and_ts]


def brute_force_blocks(events, merge_gap_ms=1000):
    """Reference: mark breakpoints, then slice runs."""
    if not events:
        return []
    breaks = [0]
    for i in range(1, len(events)):
        same = events[i].name == events[i - 1].name
        close = events[i].timestamp - events[i - 1].timestamp <= merge_gap_ms
        if not (same and close):
            breaks.append(i)
    breaks.append(len(events))
    out = []
    for lo, hi in zip(breaks, breaks[1:]):
        run = events[lo:hi]
        out.append((run[0].name, run[0].timestamp, run[-1].timestamp, len(run)))
    return out


def as_tuples(blocks):
    return [(b.event_name, b.start_ts, b.end_ts, b.occurrence_count) for b in blocks]


class TestMergeBlocks:
    def test_hand_traced_greedy_merge(self, ev):
        events = events_of(
            ev, [("hover_node", 10), ("hover_node", 510), ("hover_node", 910), ("hover_node", 2510)]
        )
        blocks = merge_blocks(events)
        assert as_tuples(blocks) == [("hover_node", 10, 910, 3), ("hover_node", 2510, 2510, 1)]

    def test_different_names_never_merge(self, ev):
        events = events_of(ev, [("hover_node", 10), ("select_node", 510)])
        assert len(merge_blocks(events)) == 2

    def test_gap_exactly_one_second_merges(self, ev):
        events = events_of(ev, [("hover_node", 10), ("hover_node", 1010)])
        blocks = merge_blocks(events)
        assert len(blocks) == 1
        assert blocks[0].occurrence_count == 2

    def test_gap_just_over_one_second_splits(self, ev):
        events = events_of(ev, [("hover_node", 10), ("hover_node", 1011)])
        assert len(merge_blocks(events)) == 2

    def test_merge_is_partition(self, ev):
        rng = random.Random(2)
        stamps = sorted(rng.randrange(1, 50_000) for _ in range(100))
        events = events_of(ev, [(rng.choice(["hover_node", "pan_zoom"]), ts) for ts in stamps])
        blocks = merge_blocks(events)
        assert sum(b.occurrence_count for b in blocks) == len(events)

    def test_matches_brute_force_on_random_streams(self, ev):
        rng = random.Random(13)
        names = ["hover_node", "select_node", "pan_zoom"]
        for _ in range(50):
            ts, stream = 1, []
            for _ in range(rng.randrange(0, 40)):
                ts += rng.choice([1, 100, 999, 1000, 1001, 5000])
                stream.append((rng.choice(names), ts))
            events = events_of(ev, stream)
            assert as_tuples(merge_blocks(events)) == brute_force_blocks(events)


class TestViewSegments:
    def test_no_open_events_single_noview(self, ev, registry):
        events = events_of(ev, [("hover_node", 10), ("hover_node", 90)])
        assert view_segments(events, registry) == [ViewSegment(ViewKind.NO_VIEW, 10, 90)]

    def test_state_machine_trace(self, ev, registry):
        events = events_of(
            ev, [("load_demo_data", 1), ("open_matrix", 10), ("open_map", 50), ("hover_node", 90)]
        )
        segs = [(s.view, s.start_ts, s.end_ts) for s in view_segments(events, registry)]
        assert segs == [
            (ViewKind.NO_VIEW, 1, 10),
            (ViewKind.MATRIX, 10, 50),
            (ViewKind.MAP, 50, 90),
        ]

    def test_open_as_last_event_zero_length_segment(self, ev, registry):
        events = events_of(ev, [("hover_node", 10), ("open_matrix", 90)])
        segs = view_segments(events, registry)
        assert segs[-1].view is ViewKind.MATRIX
        assert segs[-1].start_ts == segs[-1].end_ts == 90

    def test_segments_contiguous_and_ordered(self, ev, registry):
        rng = random.Random(4)
        stream = []
        ts = 1
        for _ in range(60):
            ts += rng.randrange(1, 10_000)
            stream.append((rng.choice(["hover_node", "open_matrix", "open_map", "open_nodelink"]), ts))
        segs = view_segments(events_of(ev, stream), registry)
        for a, b in zip(segs, segs[1:]):
            assert a.end_ts == b.start_ts
        assert segs[0].start_ts == stream[0][1]
        assert segs[-1].end_ts == stream[-1][1]


class TestBuildTimeline:
    def corpus(self, session_of):
        return resolve_corpus(
            [session_of("s1", "h1", [
                ("open_nodelink", 1000),
                ("hover_node", 2000),
                ("hover_node", 2500),
                ("bookmark_create", 4000),
            ])],
            PARAMS,
        )

    def test_unfiltered_conserves_event_count(self, session_of, registry):
        corpus = self.corpus(session_of)
        uid = corpus.users[0].user_id
        tl = build_timeline(corpus, uid, 0, registry)
        assert sum(b.occurrence_count for b in tl.blocks) == 4

    def test_filter_drops_blocks_keeps_segments(self, session_of, registry):
        corpus = self.corpus(session_of)
        uid = corpus.users[0].user_id
        tl = build_timeline(corpus, uid, 0, registry, categories={EventCategory.BOOKMARK})
        assert all(b.category is EventCategory.BOOKMARK for b in tl.blocks)
        full = build_timeline(corpus, uid, 0, registry)
        assert tl.segments == full.segments

    def test_empty_filter_result(self, session_of, registry):
        corpus = self.corpus(session_of)
        uid = corpus.users[0].user_id
        tl = build_timeline(corpus, uid, 0, registry, categories={EventCategory.ERROR_TRACKING})
        assert tl.blocks == ()
        assert len(tl.segments) > 0

    def test_filtered_blocks_identical_to_full_run(self, session_of, registry):
        corpus = self.corpus(session_of)
        uid = corpus.users[0].user_id
        full = build_timeline(corpus, uid, 0, registry)
        filtered = build_timeline(
            corpus, uid, 0, registry, categories={EventCategory.VISUALIZATION_INTERACTION}
        )
        full_by_key = {(b.event_name, b.start_ts): b for b in full.blocks}
        for b in filtered.blocks:
            assert full_by_key[(b.event_name, b.start_ts)] == b

    def test_unknown_user_and_visit_range(self, session_of, registry):
        corpus = self.corpus(session_of)
        with pytest.raises(UnknownUser):
            build_timeline(corpus, "zzz", 0, registry)
        with pytest.raises(VisitOutOfRange):
            build_timeline(corpus, corpus.users[0].user_id, 5, registry)

    def test_rebuild_is_identical(self, session_of, registry):
        corpus = self.corpus(session_of)
        uid = corpus.users[0].user_id
        assert build_timeline(corpus, uid, 0, registry) == build_timeline(corpus, uid, 0, registry)
