"""Deterministic synthetic log corpora with ground-truth labels.

Generated users satisfy their intended type's classification conditions
exactly, and every generated gap stays at least ``boundary_margin_ms`` away
from the stitch (60 s) and visit (20 min) thresholds, so pipeline round
trips recover the ground truth bit-for-bit. Threshold behavior itself is
covered by hand-built boundary tests, not random generation.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path

from .classifier import UserType
from .errors import InvalidSpec
from .sessionizer import STITCH_GAP_MS, VISIT_GAP_MS, user_id_for

DEFAULT_USER_COUNTS = {
    UserType.DEMO: 11,
    UserType.DATA_STRUGGLER: 1,
    UserType.SS_EXPLORER: 3,
    UserType.MS_EXPLORER: 5,
}

# Visit-duration means (seconds) default to observed behavior: multi-session
# explorers around 15 minutes per visit, demo users around 5.
DEFAULT_DURATION_MEANS_S = {
    UserType.DEMO: 300.0,
    UserType.DATA_STRUGGLER: 420.0,
    UserType.SS_EXPLORER: 600.0,
    UserType.MS_EXPLORER: 900.0,
}

_VIEW_OPENERS = ["open_nodelink", "open_matrix", "open_timeline", "open_map", "open_coordinated"]
_VIS_FILLER = [
    "hover_node", "hover_link", "select_node", "pan_zoom", "time_slider",
    "filter_node_type", "change_encoding", "search_label",
]
_HELP_BY_TYPE = {
    UserType.DEMO: ["help_examples", "help_demo"],
    UserType.DATA_STRUGGLER: ["help_tutorial", "help_video", "help_data_formatting"],
    UserType.SS_EXPLORER: ["help_examples"],
    UserType.MS_EXPLORER: ["help_examples"],
}

_START_2024_MS = 1_704_067_200_000  # 2024-01-01T00:00:00Z


@dataclass(frozen=True)
class GeneratorSpec:
    seed: int = 0
    user_counts: dict[UserType, int] = field(
        default_factory=lambda: dict(DEFAULT_USER_COUNTS)
    )
    visits_per_ms_user: tuple[int, int] = (2, 4)
    visit_duration_mean_s: dict[UserType, float] = field(
        default_factory=lambda: dict(DEFAULT_DURATION_MEANS_S)
    )
    events_per_visit: tuple[int, int] = (6, 18)
    cache_clear_probability: float = 0.3
    boundary_margin_ms: int = 5_000
    start_ts: int = _START_2024_MS
    span_months: int = 6

    def validate(self) -> None:
        if self.boundary_margin_ms <= 0:
            raise InvalidSpec("boundary_margin_ms must be > 0")
        if not 0.0 <= self.cache_clear_probability <= 1.0:
            raise InvalidSpec("cache_clear_probability must be in [0, 1]")
        if any(c < 0 for c in self.user_counts.values()):
            raise InvalidSpec("user counts must be >= 0")
        if self.visits_per_ms_user[0] < 2 or self.visits_per_ms_user[0] > self.visits_per_ms_user[1]:
            raise InvalidSpec("visits_per_ms_user must be a range with lower bound >= 2")
        if self.events_per_visit[0] < 4 or self.events_per_visit[0] > self.events_per_visit[1]:
            raise InvalidSpec("events_per_visit must be a range with lower bound >= 4")
        if any(m <= 0 for m in self.visit_duration_mean_s.values()):
            raise InvalidSpec("visit duration means must be > 0")

    @classmethod
    def from_config(cls, path: str | Path) -> "GeneratorSpec":
        raw = json.loads(Path(path).read_text("utf-8"))
        kwargs: dict = {}
        if "seed" in raw:
            kwargs["seed"] = raw["seed"]
        if "user_counts" in raw:
            kwargs["user_counts"] = {UserType(k): v for k, v in raw["user_counts"].items()}
        if "visit_duration_mean_s" in raw:
            kwargs["visit_duration_mean_s"] = {
                UserType(k): float(v) for k, v in raw["visit_duration_mean_s"].items()
            }
        for key in ("visits_per_ms_user", "events_per_visit"):
            if key in raw:
                kwargs[key] = tuple(raw[key])
        for key in ("cache_clear_probability", "boundary_margin_ms", "start_ts", "span_months"):
            if key in raw:
                kwargs[key] = raw[key]
        return cls(**kwargs)


@dataclass(frozen=True)
class TruthUser:
    user_id: str
    user_type: UserType
    ip_hash: str
    session_ids: tuple[str, ...]
    visit_start_ts: tuple[int, ...]
    views_opened: frozenset[str]
    networks_created: int

    @property
    def visit_count(self) -> int:
        return len(self.visit_start_ts)


@dataclass(frozen=True)
class GroundTruth:
    users: tuple[TruthUser, ...]

    def to_records(self) -> list[dict]:
        return [
            {
                "user_id": u.user_id,
                "user_type": u.user_type.value,
                "ip_hash": u.ip_hash,
                "session_ids": list(u.session_ids),
                "visit_start_ts": list(u.visit_start_ts),
                "views_opened": sorted(u.views_opened),
                "networks_created": u.networks_created,
            }
            for u in self.users
        ]


def _visit_event_names(rng: random.Random, user_type: UserType, n_events: int) -> list[str]:
    """Ordered event names for one visit, honoring the type's signal set."""
    names: list[str] = []
    if user_type is UserType.DEMO:
        names.append("load_demo_data")
    else:
        names.append("upload_own_data")
        names.append("create_network_attempt")
        if user_type is UserType.DATA_STRUGGLER:
            names.append("create_network_failure")
        else:
            names.append("create_network_success")
    names.append(rng.choice(_VIEW_OPENERS))
    while len(names) < n_events:
        roll = rng.random()
        if roll < 0.08:
            names.append(rng.choice(_HELP_BY_TYPE[user_type]))
        elif roll < 0.14:
            names.append(rng.choice(_VIEW_OPENERS))
        else:
            names.append(rng.choice(_VIS_FILLER))
    return names[:n_events]


def _visit_timestamps(
    rng: random.Random, start_ts: int, duration_ms: int, n_events: int, max_gap_ms: int
) -> list[int]:
    """n strictly positioned timestamps spanning [start, start+duration] with
    every inter-event gap in [1, max_gap_ms]."""
    if n_events == 1:
        return [start_ts]
    # Even spacing with +/- base/3 jitter keeps every gap within
    # [base/3, 5*base/3]; callers size n_events so 5*base/3 <= max_gap_ms.
    base = duration_ms / (n_events - 1)
    assert base * 5 / 3 <= max_gap_ms, "too few events for the target duration"
    ts = [start_ts]
    for i in range(1, n_events - 1):
        jitter = rng.uniform(-base / 3, base / 3)
        ts.append(max(ts[-1] + 1, start_ts + round(i * base + jitter)))
    ts.append(max(ts[-1] + 1, start_ts + duration_ms))
    return ts


def generate_corpus(spec: GeneratorSpec) -> tuple[dict[str, list[str]], GroundTruth]:
    """Emit wire-format log lines keyed by file name, plus the ground truth.

    Deterministic given the spec: identical spec yields identical bytes.
    """
    spec.validate()
    rng = random.Random(spec.seed)

    # Every inter-event gap stays clear of the stitch threshold so a cache
    # clear can split anywhere; visits stay clear of the visit threshold.
    max_event_gap = STITCH_GAP_MS - spec.boundary_margin_ms
    if max_event_gap <= 1:
        raise InvalidSpec("boundary_margin_ms leaves no room under the stitch gap")

    files: dict[str, list[str]] = {}
    truth_users: list[TruthUser] = []
    sid_counter = 0
    span_ms = spec.span_months * 30 * 86_400_000

    ordered_types = [UserType.DEMO, UserType.DATA_STRUGGLER, UserType.SS_EXPLORER, UserType.MS_EXPLORER]
    user_index = 0
    for user_type in ordered_types:
        for _ in range(spec.user_counts.get(user_type, 0)):
            ip = f"h{user_index:06d}"
            n_visits = (
                rng.randint(*spec.visits_per_ms_user)
                if user_type is UserType.MS_EXPLORER
                else 1
            )
            mean_s = spec.visit_duration_mean_s[user_type]
            first_start = spec.start_ts + int(rng.random() * span_ms)

            sid = f"s{sid_counter:06d}"
            sid_counter += 1
            session_ids = [sid]
            split_user = rng.random() < spec.cache_clear_probability
            split_at = None
            visit_starts: list[int] = []
            all_events: list[tuple[int, str, str]] = []  # (ts, name, sid)
            views: set[str] = set()
            networks = 0

            visit_start = first_start
            visit_boundary_idx: set[int] = set()
            for v in range(n_visits):
                duration_ms = int(mean_s * 1000 * rng.uniform(0.9, 1.1))
                # Enough events that jittered even spacing keeps every gap
                # under the stitch threshold minus the margin.
                min_events = -(-5 * duration_ms // (3 * max_event_gap)) + 1
                n_events = max(rng.randint(*spec.events_per_visit), min_events)
                names = _visit_event_names(rng, user_type, n_events)
                stamps = _visit_timestamps(rng, visit_start, duration_ms, n_events, max_event_gap)
                visit_starts.append(stamps[0])
                if v > 0:
                    visit_boundary_idx.add(len(all_events))
                for name, ts in zip(names, stamps):
                    all_events.append((ts, name, sid))
                    if name.startswith("open_"):
                        views.add(name.removeprefix("open_"))
                    if name == "create_network_success":
                        networks += 1
                visit_start = stamps[-1] + VISIT_GAP_MS + spec.boundary_margin_ms + int(
                    rng.random() * 6 * 3_600_000
                )

            if split_user and len(all_events) > 2:
                # New session id mid-stream simulates a cache clear. The
                # split must land inside a visit (gap under the stitch
                # threshold) so the pipeline re-stitches both files.
                eligible = [
                    i for i in range(1, len(all_events)) if i not in visit_boundary_idx
                ]
                split_at = rng.choice(eligible)
                new_sid = f"s{sid_counter:06d}"
                sid_counter += 1
                session_ids.append(new_sid)
                all_events = [
                    (ts, name, sid if i < split_at else new_sid)
                    for i, (ts, name, _) in enumerate(all_events)
                ]

            for event_sid in session_ids:
                lines = [
                    json.dumps(
                        {"sid": event_sid, "ip": ip, "ts": ts, "name": name},
                        separators=(",", ":"),
                    )
                    for ts, name, s in all_events
                    if s == event_sid
                ]
                if lines:
                    files[f"{event_sid}.vlog"] = lines

            # Session ids ordered by first event time; the split keeps stream
            # order, so insertion order is already chronological.
            truth_users.append(
                TruthUser(
                    user_id=user_id_for(ip, session_ids[0]),
                    user_type=user_type,
                    ip_hash=ip,
                    session_ids=tuple(session_ids),
                    visit_start_ts=tuple(visit_starts),
                    views_opened=frozenset(views),
                    networks_created=networks,
                )
            )
            user_index += 1

    return files, GroundTruth(users=tuple(truth_users))


def write_corpus(spec: GeneratorSpec, out_dir: str | Path) -> GroundTruth:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files, truth = generate_corpus(spec)
    for name, lines in files.items():
        (out / name).write_text("\n".join(lines) + "\n", "utf-8")
    (out / "ground_truth.json").write_text(
        json.dumps(truth.to_records(), indent=2, sort_keys=True) + "\n", "utf-8"
    )
    return truth
