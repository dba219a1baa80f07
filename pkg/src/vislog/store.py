"""Persisted analysis store: normalized accepted events plus the ingest report.

The store is a canonical JSON document (sorted keys, fixed separators, no
wall-clock fields), so re-running ingest on unchanged input produces
byte-identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import StoreMissing
from .event_model import Event, EventRegistry, ViewKind
from .ingest import IngestReport, SessionFile, ingest_path

STORE_VERSION = 1


def build_store(paths: list[str | Path], registry: EventRegistry) -> dict:
    sessions: list[SessionFile] = []
    report = IngestReport()
    for path in paths:
        part_sessions, part_report = ingest_path(path, registry)
        sessions.extend(part_sessions)
        report.files_read += part_report.files_read
        report.events_accepted += part_report.events_accepted
        report.events_rejected += part_report.events_rejected
        for reason, count in part_report.reject_reasons.items():
            report.reject_reasons[reason] = report.reject_reasons.get(reason, 0) + count
    sessions.sort(key=lambda s: (s.first_ts, s.session_id))
    return {
        "version": STORE_VERSION,
        "report": {
            "files_read": report.files_read,
            "events_accepted": report.events_accepted,
            "events_rejected": report.events_rejected,
            "reject_reasons": report.reject_reasons,
        },
        "sessions": [
            {
                "session_id": s.session_id,
                "ip_hash": s.ip_hash,
                "events": [
                    {
                        "ts": e.timestamp,
                        "name": e.name,
                        "view": e.view.value,
                        "payload": dict(e.payload),
                    }
                    for e in s.events
                ],
            }
            for s in sessions
        ],
    }


def save_store(store: dict, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(store, sort_keys=True, separators=(",", ":")) + "\n", "utf-8"
    )


def load_store(path: str | Path, registry: EventRegistry) -> tuple[list[SessionFile], IngestReport]:
    path = Path(path)
    if not path.exists():
        raise StoreMissing(str(path))
    store = json.loads(path.read_text("utf-8"))
    sessions = [
        SessionFile(
            session_id=s["session_id"],
            ip_hash=s["ip_hash"],
            events=tuple(
                Event(
                    session_id=s["session_id"],
                    ip_hash=s["ip_hash"],
                    timestamp=e["ts"],
                    name=e["name"],
                    category=registry.get(e["name"]).category,
                    view=ViewKind(e["view"]),
                    payload=e.get("payload", {}),
                )
                for e in s["events"]
            ),
        )
        for s in store["sessions"]
    ]
    r = store["report"]
    report = IngestReport(
        files_read=r["files_read"],
        events_accepted=r["events_accepted"],
        events_rejected=r["events_rejected"],
        reject_reasons=dict(r["reject_reasons"]),
    )
    return sessions, report
