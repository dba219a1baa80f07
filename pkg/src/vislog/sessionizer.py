"""Session stitching and visit segmentation.

Two rules reconstruct users from raw session files:

* stitching: session files sharing an IP hash are chained into one user when
  the later file starts within ``stitch_gap`` (inclusive) of the earlier
  file's end. Overlapping same-IP files are distinct concurrent users.
* visits: a user's merged stream is split wherever the gap between
  consecutive events reaches ``visit_gap`` (inclusive).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field, replace

from .event_model import Event
from .ingest import SessionFile

STITCH_GAP_MS = 60_000
VISIT_GAP_MS = 1_200_000


@dataclass(frozen=True)
class StitchParams:
    stitch_gap_ms: int = STITCH_GAP_MS
    visit_gap_ms: int = VISIT_GAP_MS

    def __post_init__(self) -> None:
        if self.stitch_gap_ms <= 0 or self.visit_gap_ms <= 0:
            raise ValueError("gap thresholds must be strictly positive")
        if self.stitch_gap_ms >= self.visit_gap_ms:
            raise ValueError("stitch_gap_ms must be smaller than visit_gap_ms")


@dataclass(frozen=True)
class Visit:
    index: int
    start_ts: int
    end_ts: int
    events: tuple[Event, ...]

    @property
    def duration_ms(self) -> int:
        return self.end_ts - self.start_ts


@dataclass(frozen=True)
class UserRecord:
    user_id: str
    ip_hash: str
    session_ids: tuple[str, ...]
    events: tuple[Event, ...]
    visits: tuple[Visit, ...] = ()

    @property
    def first_ts(self) -> int:
        return self.events[0].timestamp

    @property
    def last_ts(self) -> int:
        return self.events[-1].timestamp

    @property
    def visit_count(self) -> int:
        return len(self.visits)


@dataclass(frozen=True)
class Corpus:
    users: tuple[UserRecord, ...]
    _index: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        self._index.update({u.user_id: u for u in self.users})

    def get(self, user_id: str) -> UserRecord | None:
        return self._index.get(user_id)

    def __len__(self) -> int:
        return len(self.users)

    def __iter__(self):
        return iter(self.users)


def user_id_for(ip_hash: str, first_session_id: str) -> str:
    """Deterministic user token: content hash of the identity anchor."""
    digest = hashlib.sha256(f"{ip_hash}|{first_session_id}".encode()).hexdigest()
    return f"u{digest[:12]}"


def _linked(earlier: SessionFile, later: SessionFile, gap_ms: int) -> bool:
    gap = later.first_ts - earlier.last_ts
    return 0 <= gap <= gap_ms


def stitch_sessions(sessions: list[SessionFile], params: StitchParams = StitchParams()) -> list[UserRecord]:
    """Partition session files into users via transitive same-IP chaining.

    Within each IP group every ordered pair is tested for the chain link, and
    linked files are merged with union-find; this matches transitive closure
    regardless of input order. Groups are small in practice (one IP, one
    person), so the per-group quadratic scan is cheap.
    """
    by_ip: dict[str, list[SessionFile]] = {}
    for s in sessions:
        by_ip.setdefault(s.ip_hash, []).append(s)

    users: list[UserRecord] = []
    for ip in sorted(by_ip):
        group = sorted(by_ip[ip], key=lambda s: (s.first_ts, s.session_id))
        parent = list(range(len(group)))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                if _linked(group[i], group[j], params.stitch_gap_ms):
                    parent[find(j)] = find(i)

        chains: dict[int, list[SessionFile]] = {}
        for i, s in enumerate(group):
            chains.setdefault(find(i), []).append(s)

        for members in chains.values():
            members.sort(key=lambda s: (s.first_ts, s.session_id))
            merged = sorted(
                (e for s in members for e in s.events), key=lambda e: e.timestamp
            )
            users.append(
                UserRecord(
                    user_id=user_id_for(ip, members[0].session_id),
                    ip_hash=ip,
                    session_ids=tuple(s.session_id for s in members),
                    events=tuple(merged),
                )
            )

    users.sort(key=lambda u: (u.first_ts, u.user_id))
    return users


def segment_visits(user: UserRecord, params: StitchParams = StitchParams()) -> UserRecord:
    """Split the merged stream into visits at inactivity gaps >= visit_gap."""
    visits: list[Visit] = []
    current: list[Event] = []
    for event in user.events:
        if current and event.timestamp - current[-1].timestamp >= params.visit_gap_ms:
            visits.append(
                Visit(len(visits), current[0].timestamp, current[-1].timestamp, tuple(current))
            )
            current = []
        current.append(event)
    if current:
        visits.append(
            Visit(len(visits), current[0].timestamp, current[-1].timestamp, tuple(current))
        )
    return replace(user, visits=tuple(visits))


def resolve_corpus(sessions: list[SessionFile], params: StitchParams = StitchParams()) -> Corpus:
    """Stitch then segment; the full identity-reconstruction pipeline."""
    users = [segment_visits(u, params) for u in stitch_sessions(sessions, params)]
    return Corpus(users=tuple(users))
