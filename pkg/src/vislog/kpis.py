"""KPI computation over a classified corpus.

Three bundles mirror the dashboard pages: overview metrics (user counts,
monthly trend, session lengths, retention, feature/help usage, time by
type), per-view visualization metrics (reach, dwell, intent-group feature
usage), and per-user journeys (built in the timeline module).

All operations are pure over an immutable corpus snapshot; repeated runs are
byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import date, datetime, timezone
from enum import Enum
from pathlib import Path
from statistics import fmean
from typing import Iterable, Sequence

from .classifier import UserType
from .errors import InvalidAnnotation
from .event_model import REAL_VIEWS, EventRegistry, HelpResourceKind, ViewKind
from .sessionizer import Corpus, UserRecord, Visit

IDLE_CAP_MS = 300_000


@dataclass(frozen=True)
class DwellParams:
    idle_cap_ms: int = IDLE_CAP_MS

    def __post_init__(self) -> None:
        if self.idle_cap_ms <= 0:
            raise ValueError("idle_cap_ms must be strictly positive")


class AnnotationKind(str, Enum):
    WORKSHOP = "Workshop"
    COURSE = "Course"
    COACHING = "Coaching"
    RELEASE = "Release"
    OTHER = "Other"


@dataclass(frozen=True)
class Annotation:
    label: str
    kind: AnnotationKind
    start_date: date
    end_date: date


@dataclass(frozen=True)
class Summary:
    """Five-number summary plus mean, in seconds."""

    min: float
    p25: float
    median: float
    p75: float
    max: float
    mean: float


def _percentile(sorted_values: Sequence[float], q: float) -> float:
    # Linear interpolation between closest ranks; median of an even-length
    # sample is the mean of the two central values.
    n = len(sorted_values)
    if n == 1:
        return sorted_values[0]
    pos = q * (n - 1)
    lo = int(pos)
    hi = min(lo + 1, n - 1)
    frac = pos - lo
    return sorted_values[lo] * (1 - frac) + sorted_values[hi] * frac


def summarize(values: Iterable[float]) -> Summary | None:
    vals = sorted(values)
    if not vals:
        return None
    return Summary(
        min=vals[0],
        p25=_percentile(vals, 0.25),
        median=_percentile(vals, 0.5),
        p75=_percentile(vals, 0.75),
        max=vals[-1],
        mean=fmean(vals),
    )


def month_of(ts_ms: int) -> str:
    dt = datetime.fromtimestamp(ts_ms / 1000, tz=timezone.utc)
    return f"{dt.year:04d}-{dt.month:02d}"


def _month_range(first: str, last: str) -> list[str]:
    y, m = map(int, first.split("-"))
    ly, lm = map(int, last.split("-"))
    months = []
    while (y, m) <= (ly, lm):
        months.append(f"{y:04d}-{m:02d}")
        m += 1
        if m > 12:
            y, m = y + 1, 1
    return months


def monthly_visit_trend(corpus: Corpus) -> list[tuple[str, int]]:
    """Visit counts per UTC month of visit start, contiguous incl. zero months."""
    counts: dict[str, int] = {}
    for user in corpus:
        for visit in user.visits:
            key = month_of(visit.start_ts)
            counts[key] = counts.get(key, 0) + 1
    if not counts:
        return []
    months = _month_range(min(counts), max(counts))
    return [(m, counts.get(m, 0)) for m in months]


def session_length_distribution(
    corpus: Corpus, types: dict[str, UserType]
) -> dict[UserType, Summary | None]:
    durations: dict[UserType, list[float]] = {t: [] for t in UserType}
    for user in corpus:
        t = types[user.user_id]
        durations[t].extend(v.duration_ms / 1000 for v in user.visits)
    return {t: summarize(vals) for t, vals in durations.items()}


def returning_rate(corpus: Corpus) -> float:
    if len(corpus) == 0:
        return 0.0
    return sum(1 for u in corpus if u.visit_count >= 2) / len(corpus)


def feature_frequency(corpus: Corpus, n: int) -> list[tuple[str, int]]:
    """Top-n event names by raw count; ties break lexicographically."""
    if n < 1:
        raise ValueError("n must be >= 1")
    counts: dict[str, int] = {}
    for user in corpus:
        for e in user.events:
            counts[e.name] = counts.get(e.name, 0) + 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[:n]


def help_usage_by_type(
    corpus: Corpus, types: dict[str, UserType], registry: EventRegistry
) -> dict[UserType, dict[HelpResourceKind, int]]:
    kinds = [k for k in HelpResourceKind if k is not HelpResourceKind.NONE]
    matrix = {t: {k: 0 for k in kinds} for t in UserType}
    for user in corpus:
        t = types[user.user_id]
        for e in user.events:
            kind = registry.get(e.name).help_kind
            if kind is not HelpResourceKind.NONE:
                matrix[t][kind] += 1
    return matrix


def time_by_type(
    corpus: Corpus, types: dict[str, UserType]
) -> dict[UserType, dict[str, float]]:
    """Total and mean visit duration (seconds) per user type."""
    durations: dict[UserType, list[float]] = {t: [] for t in UserType}
    for user in corpus:
        durations[types[user.user_id]].extend(v.duration_ms / 1000 for v in user.visits)
    return {
        t: {"total_s": sum(vals), "mean_s": fmean(vals) if vals else 0.0}
        for t, vals in durations.items()
    }


def _visit_views(visit: Visit, openers: dict[str, ViewKind]) -> list[ViewKind]:
    """Current view at each event: NoView until the first open event."""
    views = []
    current = ViewKind.NO_VIEW
    for e in visit.events:
        opened = openers.get(e.name)
        if opened is not None:
            current = opened
        views.append(current)
    return views


def view_dwell(
    user: UserRecord, registry: EventRegistry, params: DwellParams = DwellParams()
) -> dict[ViewKind, float]:
    """Seconds attributed to each view via the current-view state machine.

    Each consecutive event pair within a visit contributes min(gap, idle_cap)
    to the view active at the pair's first event. Visits never bridge.
    """
    openers = registry.view_openers()
    dwell = {v: 0.0 for v in ViewKind}
    for visit in user.visits:
        views = _visit_views(visit, openers)
        for i in range(len(visit.events) - 1):
            gap = visit.events[i + 1].timestamp - visit.events[i].timestamp
            dwell[views[i]] += min(gap, params.idle_cap_ms) / 1000
    return dwell


@dataclass(frozen=True)
class ViewColumn:
    view: ViewKind
    user_count: int
    time_per_user: Summary | None
    filtering_usage: list[tuple[str, int]]
    representation_usage: list[tuple[str, int]]


@dataclass(frozen=True)
class VisualizationKpis:
    columns: dict[ViewKind, ViewColumn]


def visualization_kpis(
    corpus: Corpus, registry: EventRegistry, params: DwellParams = DwellParams()
) -> VisualizationKpis:
    from .event_model import IntentGroup

    openers = registry.view_openers()
    users_in_view: dict[ViewKind, set[str]] = {v: set() for v in REAL_VIEWS}
    dwell_per_user: dict[ViewKind, list[float]] = {v: [] for v in REAL_VIEWS}
    filt: dict[ViewKind, dict[str, int]] = {v: {} for v in REAL_VIEWS}
    repr_: dict[ViewKind, dict[str, int]] = {v: {} for v in REAL_VIEWS}

    for user in corpus:
        dwell = view_dwell(user, registry, params)
        seen: set[ViewKind] = set()
        for visit in user.visits:
            views = _visit_views(visit, openers)
            for e, v in zip(visit.events, views):
                if v is ViewKind.NO_VIEW:
                    continue
                seen.add(v)
                group = registry.get(e.name).intent_group
                if group is IntentGroup.DATA_FILTERING:
                    filt[v][e.name] = filt[v].get(e.name, 0) + 1
                elif group is IntentGroup.REPRESENTATION_CHANGE:
                    repr_[v][e.name] = repr_[v].get(e.name, 0) + 1
        for v in seen:
            users_in_view[v].add(user.user_id)
            dwell_per_user[v].append(dwell[v])

    def ranked(counts: dict[str, int]) -> list[tuple[str, int]]:
        return sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))

    columns = {
        v: ViewColumn(
            view=v,
            user_count=len(users_in_view[v]),
            time_per_user=summarize(dwell_per_user[v]),
            filtering_usage=ranked(filt[v]),
            representation_usage=ranked(repr_[v]),
        )
        for v in REAL_VIEWS
    }
    return VisualizationKpis(columns=columns)


def annotate_trend(
    trend: list[tuple[str, int]], annotations: list[Annotation]
) -> list[tuple[str, int, list[Annotation]]]:
    """Attach each annotation to every month its date range overlaps (inclusive)."""
    for a in annotations:
        if a.start_date > a.end_date:
            raise InvalidAnnotation(f"{a.label}: start {a.start_date} after end {a.end_date}")
    out = []
    for month, count in trend:
        y, m = map(int, month.split("-"))
        overlapping = [
            a
            for a in annotations
            if (a.start_date.year, a.start_date.month) <= (y, m) <= (a.end_date.year, a.end_date.month)
        ]
        out.append((month, count, overlapping))
    return out


def load_annotations(path: str | Path) -> list[Annotation]:
    records = json.loads(Path(path).read_text("utf-8"))
    annotations = []
    for r in records:
        a = Annotation(
            label=r["label"],
            kind=AnnotationKind(r.get("kind", "Other")),
            start_date=date.fromisoformat(r["start_date"]),
            end_date=date.fromisoformat(r["end_date"]),
        )
        if a.start_date > a.end_date:
            raise InvalidAnnotation(f"{a.label}: start after end")
        annotations.append(a)
    return annotations


@dataclass(frozen=True)
class OverviewKpis:
    total_users: int
    type_counts: dict[UserType, int]
    monthly_visits: list[tuple[str, int]]
    session_length_dist: dict[UserType, Summary | None]
    returning_rate: float
    annotated_trend: list[tuple[str, int, list[Annotation]]]
    feature_frequency: list[tuple[str, int]]
    help_usage: dict[UserType, dict[HelpResourceKind, int]]
    time_by_type: dict[UserType, dict[str, float]]


def overview_kpis(
    corpus: Corpus,
    types: dict[str, UserType],
    counts: dict[UserType, int],
    registry: EventRegistry,
    annotations: list[Annotation] | None = None,
    top_n: int = 10,
) -> OverviewKpis:
    trend = monthly_visit_trend(corpus)
    return OverviewKpis(
        total_users=len(corpus),
        type_counts=dict(counts),
        monthly_visits=trend,
        session_length_dist=session_length_distribution(corpus, types),
        returning_rate=returning_rate(corpus),
        annotated_trend=annotate_trend(trend, annotations or []),
        feature_frequency=feature_frequency(corpus, top_n) if len(corpus) else [],
        help_usage=help_usage_by_type(corpus, types, registry),
        time_by_type=time_by_type(corpus, types),
    )
