"""Per-visit timelines: rapid-fire event blocks and current-view segments."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownUser, VisitOutOfRange
from .event_model import Event, EventCategory, EventRegistry, ViewKind
from .sessionizer import Corpus

MERGE_GAP_MS = 1_000


@dataclass(frozen=True)
class TimelineBlock:
    event_name: str
    category: EventCategory
    start_ts: int
    end_ts: int
    occurrence_count: int


@dataclass(frozen=True)
class ViewSegment:
    view: ViewKind
    start_ts: int
    end_ts: int


@dataclass(frozen=True)
class Timeline:
    user_id: str
    visit_index: int
    blocks: tuple[TimelineBlock, ...]
    segments: tuple[ViewSegment, ...]


def merge_blocks(events: list[Event], merge_gap_ms: int = MERGE_GAP_MS) -> list[TimelineBlock]:
    """Greedy left-to-right merge of identical consecutive events.

    An event joins the current block when it has the same name and follows
    the previous event by at most merge_gap (inclusive, chained: the gap is
    measured to the previous event, not the block start). Any other event
    starts a new block.
    """
    blocks: list[TimelineBlock] = []
    run: list[Event] = []

    def flush() -> None:
        if run:
            blocks.append(
                TimelineBlock(
                    event_name=run[0].name,
                    category=run[0].category,
                    start_ts=run[0].timestamp,
                    end_ts=run[-1].timestamp,
                    occurrence_count=len(run),
                )
            )

    for e in events:
        if run and (e.name != run[-1].name or e.timestamp - run[-1].timestamp > merge_gap_ms):
            flush()
            run = []
        run.append(e)
    flush()
    return blocks


def view_segments(events: list[Event], registry: EventRegistry) -> list[ViewSegment]:
    """Contiguous current-view intervals: NoView until the first open event,
    then each open event closes the previous segment and starts its own."""
    if not events:
        return []
    openers = registry.view_openers()
    start = events[0].timestamp
    end = events[-1].timestamp
    segments: list[ViewSegment] = []
    current = ViewKind.NO_VIEW
    seg_start = start
    for e in events:
        opened = openers.get(e.name)
        if opened is not None and opened is not current:
            if e.timestamp > seg_start or current is not ViewKind.NO_VIEW or segments:
                segments.append(ViewSegment(current, seg_start, e.timestamp))
            current = opened
            seg_start = e.timestamp
    segments.append(ViewSegment(current, seg_start, end))
    return segments


def build_timeline(
    corpus: Corpus,
    user_id: str,
    visit_index: int,
    registry: EventRegistry,
    categories: set[EventCategory] | None = None,
) -> Timeline:
    """Timeline for one visit; category filtering happens after merging so
    toggling filters never moves the remaining blocks."""
    user = corpus.get(user_id)
    if user is None:
        raise UnknownUser(user_id)
    if not 0 <= visit_index < user.visit_count:
        raise VisitOutOfRange(f"{user_id}: visit {visit_index}")
    visit = user.visits[visit_index]
    events = list(visit.events)
    blocks = merge_blocks(events)
    if categories is not None:
        blocks = [b for b in blocks if b.category in categories]
    return Timeline(
        user_id=user_id,
        visit_index=visit_index,
        blocks=tuple(blocks),
        segments=tuple(view_segments(events, registry)),
    )
