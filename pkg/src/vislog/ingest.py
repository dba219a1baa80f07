"""Log-file ingestion: parse newline-delimited event records into per-session streams.

Wire format: one JSON object per line with keys ``sid``, ``ip``, ``ts``
(integer epoch-ms or ISO-8601 UTC string), ``name``, and optional ``view``
and ``payload``. Whitespace-only lines are skipped. Per-line problems are
counted in the report, never fatal; only an unreadable path aborts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable, Optional

from .errors import (
    IoFailure,
    MalformedRecord,
    MissingField,
    NonPositiveTimestamp,
    UnknownEventName,
)
from .event_model import Event, EventRegistry, ViewKind, validate_event


@dataclass(frozen=True)
class SessionFile:
    """All events carrying one session ID, time-sorted."""

    session_id: str
    ip_hash: str
    events: tuple[Event, ...]

    @property
    def first_ts(self) -> int:
        return self.events[0].timestamp

    @property
    def last_ts(self) -> int:
        return self.events[-1].timestamp


@dataclass
class IngestReport:
    files_read: int = 0
    events_accepted: int = 0
    events_rejected: int = 0
    reject_reasons: dict[str, int] = field(default_factory=dict)

    def reject(self, reason: str) -> None:
        self.events_rejected += 1
        self.reject_reasons[reason] = self.reject_reasons.get(reason, 0) + 1


def _parse_ts(value) -> int:
    if isinstance(value, bool):
        raise ValueError("ts must be epoch-ms or ISO-8601")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        dt = datetime.fromisoformat(value.replace("Z", "+00:00"))
        if dt.tzinfo is None:
            dt = dt.replace(tzinfo=timezone.utc)
        return int(dt.timestamp() * 1000)
    raise ValueError("ts must be epoch-ms or ISO-8601")


def parse_log_line(line: str, registry: EventRegistry, position: int = 0) -> Optional[Event]:
    """Parse one wire-format line; returns None for whitespace-only lines."""
    if not line.strip():
        return None
    try:
        record = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MalformedRecord(position, f"invalid JSON: {exc.msg}") from None
    if not isinstance(record, dict):
        raise MalformedRecord(position, "record is not an object")
    if "ts" not in record or "name" not in record or "sid" not in record:
        missing = [k for k in ("sid", "ts", "name") if k not in record]
        raise MalformedRecord(position, f"missing {'/'.join(missing)}")
    try:
        ts = _parse_ts(record["ts"])
    except ValueError as exc:
        raise MalformedRecord(position, str(exc)) from None
    view = record.get("view")
    if view is not None:
        try:
            view = ViewKind(view)
        except ValueError:
            raise MalformedRecord(position, f"unknown view token: {view!r}") from None
    payload = record.get("payload")
    if payload is not None and not isinstance(payload, dict):
        raise MalformedRecord(position, "payload must be an object")
    return validate_event(
        {
            "session_id": record["sid"],
            "ip_hash": record.get("ip", ""),
            "timestamp": ts,
            "name": record["name"],
            "view": view,
            "payload": payload,
        },
        registry,
    )


def _iter_files(path: Path) -> list[Path]:
    if path.is_dir():
        return sorted(path.rglob("*.vlog"))
    return [path]


def ingest_path(path: str | Path, registry: EventRegistry) -> tuple[list[SessionFile], IngestReport]:
    """Read a ``.vlog`` file or a directory of them into grouped session streams.

    Events are grouped by session ID across file boundaries and time-sorted
    (stable on equal timestamps in input order). Output is ordered by
    (first_ts, session_id) so runs are deterministic regardless of how the
    input was laid out on disk.
    """
    path = Path(path)
    if not path.exists():
        raise IoFailure(str(path))

    report = IngestReport()
    groups: dict[str, list[Event]] = {}
    group_ip: dict[str, str] = {}

    for file_path in _iter_files(path):
        try:
            text = file_path.read_text("utf-8")
        except OSError as exc:
            raise IoFailure(f"{file_path}: {exc}") from None
        report.files_read += 1
        for lineno, line in enumerate(text.splitlines(), start=1):
            try:
                event = parse_log_line(line, registry, position=lineno)
            except MalformedRecord:
                report.reject("malformed")
                continue
            except UnknownEventName:
                report.reject("unknown_event_name")
                continue
            except MissingField:
                report.reject("missing_field")
                continue
            except NonPositiveTimestamp:
                report.reject("non_positive_timestamp")
                continue
            if event is None:
                continue
            sid = event.session_id
            known_ip = group_ip.get(sid)
            if known_ip is None:
                group_ip[sid] = event.ip_hash
            elif event.ip_hash != known_ip:
                # A session ID is browser-scoped; a second IP on the same
                # sid indicates corrupt or spoofed lines.
                report.reject("ip_conflict")
                continue
            groups.setdefault(sid, []).append(event)
            report.events_accepted += 1

    sessions = []
    for sid, events in groups.items():
        events.sort(key=lambda e: e.timestamp)  # stable: ties keep input order
        sessions.append(SessionFile(session_id=sid, ip_hash=group_ip[sid], events=tuple(events)))
    sessions.sort(key=lambda s: (s.first_ts, s.session_id))
    return sessions, report


def sessions_from_events(events: Iterable[Event]) -> list[SessionFile]:
    """Group already-validated events into SessionFiles (same rules as ingest_path)."""
    groups: dict[str, list[Event]] = {}
    group_ip: dict[str, str] = {}
    for event in events:
        groups.setdefault(event.session_id, []).append(event)
        group_ip.setdefault(event.session_id, event.ip_hash)
    sessions = []
    for sid, evs in groups.items():
        evs.sort(key=lambda e: e.timestamp)
        sessions.append(SessionFile(session_id=sid, ip_hash=group_ip[sid], events=tuple(evs)))
    sessions.sort(key=lambda s: (s.first_ts, s.session_id))
    return sessions
