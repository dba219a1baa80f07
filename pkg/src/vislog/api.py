"""Read-only HTTP/JSON API serving KPI payloads and timelines to the dashboard.

Snapshot-swap model: a reload re-ingests the store and atomically publishes a
new immutable snapshot; every response is consistent with exactly one
snapshot, echoed in the X-Snapshot-Id header. Reads never block on reloads.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .classifier import UserType, classify_corpus, extract_signals
from .errors import StoreMissing, UnknownUser, VisitOutOfRange
from .event_model import EventCategory, EventRegistry, default_registry
from .kpis import (
    Annotation,
    DwellParams,
    OverviewKpis,
    Summary,
    VisualizationKpis,
    load_annotations,
    overview_kpis,
    visualization_kpis,
)
from .sessionizer import Corpus, StitchParams, resolve_corpus
from .store import load_store
from .timeline import Timeline, build_timeline


def _summary_payload(s: Summary | None) -> dict | None:
    if s is None:
        return None
    return {"min": s.min, "p25": s.p25, "median": s.median, "p75": s.p75,
            "max": s.max, "mean": s.mean}


def _annotation_payload(a: Annotation) -> dict:
    return {
        "label": a.label,
        "kind": a.kind.value,
        "start_date": a.start_date.isoformat(),
        "end_date": a.end_date.isoformat(),
    }


def overview_payload(kpis: OverviewKpis) -> dict:
    return {
        "total_users": kpis.total_users,
        "type_counts": {t.value: c for t, c in kpis.type_counts.items()},
        "monthly_visits": [{"month": m, "count": c} for m, c in kpis.monthly_visits],
        "session_length_dist": {
            t.value: _summary_payload(s) for t, s in kpis.session_length_dist.items()
        },
        "returning_rate": kpis.returning_rate,
        "annotated_trend": [
            {"month": m, "count": c, "annotations": [_annotation_payload(a) for a in anns]}
            for m, c, anns in kpis.annotated_trend
        ],
        "feature_frequency": [{"name": n, "count": c} for n, c in kpis.feature_frequency],
        "help_usage": {
            t.value: {k.value: c for k, c in row.items()} for t, row in kpis.help_usage.items()
        },
        "time_by_type": {t.value: dict(row) for t, row in kpis.time_by_type.items()},
    }


def visualization_payload(kpis: VisualizationKpis) -> dict:
    return {
        "columns": {
            v.value: {
                "user_count": col.user_count,
                "time_per_user": _summary_payload(col.time_per_user),
                "filtering_usage": [{"name": n, "count": c} for n, c in col.filtering_usage],
                "representation_usage": [
                    {"name": n, "count": c} for n, c in col.representation_usage
                ],
            }
            for v, col in kpis.columns.items()
        }
    }


def timeline_payload(timeline: Timeline) -> dict:
    return {
        "user_id": timeline.user_id,
        "visit_index": timeline.visit_index,
        "blocks": [
            {
                "name": b.event_name,
                "category": b.category.value,
                "start_ts": b.start_ts,
                "end_ts": b.end_ts,
                "count": b.occurrence_count,
            }
            for b in timeline.blocks
        ],
        "segments": [
            {"view": s.view.value, "start_ts": s.start_ts, "end_ts": s.end_ts}
            for s in timeline.segments
        ],
    }


@dataclass(frozen=True)
class Snapshot:
    snapshot_id: int
    built_at: str
    corpus: Corpus
    types: dict[str, UserType]
    overview_bytes: bytes
    visualizations_bytes: bytes
    user_rows: list[dict]


def build_snapshot(
    snapshot_id: int,
    store_path: str | Path,
    registry: EventRegistry,
    params: StitchParams,
    dwell: DwellParams,
    annotations: list[Annotation],
) -> Snapshot:
    sessions, _report = load_store(store_path, registry)
    corpus = resolve_corpus(sessions, params)
    types, counts = classify_corpus(corpus)
    overview = overview_payload(overview_kpis(corpus, types, counts, registry, annotations))
    vis = visualization_payload(visualization_kpis(corpus, registry, dwell))
    user_rows = []
    for user in corpus:
        signals = extract_signals(user)
        user_rows.append(
            {
                "id": user.user_id,
                "type": types[user.user_id].value,
                "visit_count": user.visit_count,
                "networks_created": signals.networks_created,
                "first_seen": user.first_ts,
                "last_seen": user.last_ts,
            }
        )
    user_rows.sort(key=lambda r: (-r["last_seen"], r["id"]))
    encode = lambda obj: json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()
    return Snapshot(
        snapshot_id=snapshot_id,
        built_at=datetime.now(timezone.utc).isoformat(),
        corpus=corpus,
        types=types,
        overview_bytes=encode(overview),
        visualizations_bytes=encode(vis),
        user_rows=user_rows,
    )


DEFAULT_PAGE_SIZE = 50
MAX_PAGE_SIZE = 500


def create_app(
    store_path: str | Path,
    registry: EventRegistry | None = None,
    params: StitchParams = StitchParams(),
    dwell: DwellParams = DwellParams(),
    annotations_path: str | Path | None = None,
    cors_origins: list[str] | None = None,
) -> FastAPI:
    registry = registry or default_registry()
    annotations = load_annotations(annotations_path) if annotations_path else []
    app = FastAPI(title="vislog analytics API")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins or ["*"],
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )

    state = {"snapshot": None, "next_id": 1}
    reload_lock = threading.Lock()
    registry_bytes = json.dumps(
        registry.to_records(), sort_keys=True, separators=(",", ":")
    ).encode()

    def try_reload() -> Snapshot | None:
        with reload_lock:
            try:
                snapshot = build_snapshot(
                    state["next_id"], store_path, registry, params, dwell, annotations
                )
            except StoreMissing:
                return None
            state["next_id"] += 1
            state["snapshot"] = snapshot  # atomic publish
            return snapshot

    try_reload()

    def current() -> Snapshot | None:
        return state["snapshot"]

    def no_snapshot() -> JSONResponse:
        return JSONResponse({"detail": "no snapshot loaded"}, status_code=503)

    def with_header(response: Response, snapshot: Snapshot) -> Response:
        response.headers["X-Snapshot-Id"] = str(snapshot.snapshot_id)
        return response

    @app.get("/api/health")
    def health():
        snapshot = current()
        if snapshot is None:
            return no_snapshot()
        return with_header(
            JSONResponse({"snapshot_id": snapshot.snapshot_id, "built_at": snapshot.built_at}),
            snapshot,
        )

    @app.get("/api/overview")
    def overview():
        snapshot = current()
        if snapshot is None:
            return no_snapshot()
        return with_header(
            Response(content=snapshot.overview_bytes, media_type="application/json"), snapshot
        )

    @app.get("/api/visualizations")
    def visualizations():
        snapshot = current()
        if snapshot is None:
            return no_snapshot()
        return with_header(
            Response(content=snapshot.visualizations_bytes, media_type="application/json"),
            snapshot,
        )

    @app.get("/api/registry")
    def registry_endpoint():
        snapshot = current()
        if snapshot is None:
            return no_snapshot()
        return with_header(
            Response(content=registry_bytes, media_type="application/json"), snapshot
        )

    @app.get("/api/users")
    def users(type: str | None = None, page: int = 1, page_size: int = DEFAULT_PAGE_SIZE):
        snapshot = current()
        if snapshot is None:
            return no_snapshot()
        if page < 1 or page_size < 1 or page_size > MAX_PAGE_SIZE:
            return JSONResponse({"detail": "invalid paging parameters"}, status_code=400)
        rows = snapshot.user_rows
        if type is not None:
            if type not in {t.value for t in UserType}:
                return JSONResponse({"detail": f"unknown user type: {type}"}, status_code=400)
            rows = [r for r in rows if r["type"] == type]
        start = (page - 1) * page_size
        body = {
            "total": len(rows),
            "page": page,
            "page_size": page_size,
            "users": rows[start : start + page_size],
        }
        return with_header(JSONResponse(body), snapshot)

    @app.get("/api/users/{user_id}/timeline")
    def user_timeline(user_id: str, visit: int = 0, categories: str | None = None):
        snapshot = current()
        if snapshot is None:
            return no_snapshot()
        category_filter = None
        if categories is not None:
            try:
                category_filter = {
                    EventCategory(token) for token in categories.split(",") if token
                }
            except ValueError:
                return JSONResponse({"detail": "unknown category token"}, status_code=400)
        try:
            timeline = build_timeline(
                snapshot.corpus, user_id, visit, registry, category_filter
            )
        except UnknownUser:
            return JSONResponse({"detail": f"unknown user: {user_id}"}, status_code=404)
        except VisitOutOfRange:
            return JSONResponse({"detail": f"no visit {visit} for {user_id}"}, status_code=404)
        return with_header(JSONResponse(timeline_payload(timeline)), snapshot)

    @app.post("/api/reload")
    def reload(request: Request):
        snapshot = try_reload()
        if snapshot is None:
            return no_snapshot()
        return with_header(
            JSONResponse({"snapshot_id": snapshot.snapshot_id, "built_at": snapshot.built_at}),
            snapshot,
        )

    return app
