"""Event taxonomy: categories, intent groups, view kinds, and the type registry.

The registry is the single source of truth for which event names exist and
what they mean. It is immutable after startup configuration and safe for
unsynchronized concurrent reads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterator, Mapping

from .errors import (
    DuplicateName,
    MissingField,
    NonPositiveTimestamp,
    UnknownEventName,
)


class EventCategory(str, Enum):
    DATA_MANAGEMENT = "DataManagement"
    VISUALIZATION_INTERACTION = "VisualizationInteraction"
    SUPPORT_HELP = "SupportHelp"
    COMMUNICATION = "Communication"
    BOOKMARK = "Bookmark"
    ERROR_TRACKING = "ErrorTracking"
    ACTIVITY_LOGS = "ActivityLogs"


class IntentGroup(str, Enum):
    DATA_FILTERING = "DataFiltering"
    REPRESENTATION_CHANGE = "RepresentationChange"
    NONE = "None"


class ViewKind(str, Enum):
    NODE_LINK = "NodeLink"
    MATRIX = "Matrix"
    TIMELINE = "Timeline"
    MAP = "Map"
    COORDINATED = "Coordinated"
    NO_VIEW = "NoView"


#: The five real tool views, excluding the NoView placeholder.
REAL_VIEWS: tuple[ViewKind, ...] = (
    ViewKind.NODE_LINK,
    ViewKind.MATRIX,
    ViewKind.TIMELINE,
    ViewKind.MAP,
    ViewKind.COORDINATED,
)


class HelpResourceKind(str, Enum):
    EXAMPLES = "Examples"
    TUTORIALS = "Tutorials"
    VIDEOS = "Videos"
    DEMOS = "Demos"
    DATA_FORMATTING = "DataFormatting"
    NONE = "None"


ALL_VIEWS: frozenset[ViewKind] = frozenset(REAL_VIEWS)
NO_VIEW_ONLY: frozenset[ViewKind] = frozenset({ViewKind.NO_VIEW})


@dataclass(frozen=True)
class EventTypeDef:
    name: str
    category: EventCategory
    intent_group: IntentGroup = IntentGroup.NONE
    view_scope: frozenset[ViewKind] = NO_VIEW_ONLY
    help_kind: HelpResourceKind = HelpResourceKind.NONE

    def __post_init__(self) -> None:
        if not self.name or self.name != self.name.lower():
            raise ValueError(f"event name must be a lowercase token: {self.name!r}")
        if (
            self.intent_group is not IntentGroup.NONE
            and self.category is not EventCategory.VISUALIZATION_INTERACTION
        ):
            raise ValueError(
                f"{self.name}: only visualization-interaction events may carry an intent group"
            )
        if (
            self.help_kind is not HelpResourceKind.NONE
            and self.category is not EventCategory.SUPPORT_HELP
        ):
            raise ValueError(
                f"{self.name}: only support/help events may carry a help resource kind"
            )


@dataclass(frozen=True)
class Event:
    """One normalized interaction record."""

    session_id: str
    ip_hash: str
    timestamp: int  # milliseconds since Unix epoch, UTC
    name: str
    category: EventCategory
    view: ViewKind = ViewKind.NO_VIEW
    payload: Mapping[str, str] = field(default_factory=dict)


class EventRegistry:
    """Insertion-ordered mapping of event name to its type definition."""

    def __init__(self) -> None:
        self._defs: dict[str, EventTypeDef] = {}

    def register(self, type_def: EventTypeDef) -> "EventRegistry":
        if type_def.name in self._defs:
            raise DuplicateName(type_def.name)
        self._defs[type_def.name] = type_def
        return self

    def get(self, name: str) -> EventTypeDef:
        try:
            return self._defs[name]
        except KeyError:
            raise UnknownEventName(name) from None

    def __contains__(self, name: str) -> bool:
        return name in self._defs

    def __iter__(self) -> Iterator[EventTypeDef]:
        return iter(self._defs.values())

    def __len__(self) -> int:
        return len(self._defs)

    def view_openers(self) -> dict[str, ViewKind]:
        """Map each ``open_*`` event name to the single view it activates.

        These events are the sole markers of view context; everything else
        inherits the current view.
        """
        openers: dict[str, ViewKind] = {}
        for d in self._defs.values():
            if (
                d.category is EventCategory.VISUALIZATION_INTERACTION
                and d.name.startswith("open_")
                and len(d.view_scope) == 1
            ):
                (only,) = d.view_scope
                if only is not ViewKind.NO_VIEW:
                    openers[d.name] = only
        return openers

    def to_records(self) -> list[dict]:
        return [
            {
                "name": d.name,
                "category": d.category.value,
                "intent_group": d.intent_group.value,
                "views": sorted(v.value for v in d.view_scope),
                "help_kind": d.help_kind.value,
            }
            for d in self
        ]

    @classmethod
    def from_records(cls, records: list[dict]) -> "EventRegistry":
        reg = cls()
        for r in records:
            reg.register(
                EventTypeDef(
                    name=r["name"],
                    category=EventCategory(r["category"]),
                    intent_group=IntentGroup(r.get("intent_group", "None")),
                    view_scope=frozenset(ViewKind(v) for v in r.get("views", ["NoView"])),
                    help_kind=HelpResourceKind(r.get("help_kind", "None")),
                )
            )
        return reg

    @classmethod
    def from_config(cls, path: str | Path) -> "EventRegistry":
        return cls.from_records(json.loads(Path(path).read_text("utf-8")))


def register_event_type(registry: EventRegistry, type_def: EventTypeDef) -> EventRegistry:
    return registry.register(type_def)


def intent_group_of(name: str, registry: EventRegistry) -> IntentGroup:
    return registry.get(name).intent_group


def validate_event(raw: Mapping, registry: EventRegistry) -> Event:
    """Normalize a candidate record into an Event, or raise.

    ``raw`` uses canonical keys: session_id, ip_hash, timestamp, name, and
    optionally view and payload. The category always comes from the registry;
    ``open_*`` events get their view from the registry, everything else
    defaults to NoView unless the record names a view explicitly.
    """
    missing = [k for k in ("session_id", "timestamp", "name") if raw.get(k) in (None, "")]
    if missing:
        raise MissingField(*missing)
    ts = raw["timestamp"]
    if not isinstance(ts, int) or isinstance(ts, bool):
        raise MissingField("timestamp")
    if ts <= 0:
        raise NonPositiveTimestamp(str(ts))
    name = raw["name"]
    type_def = registry.get(name)

    view = raw.get("view")
    if view is None:
        opened = registry.view_openers().get(name)
        view = opened if opened is not None else ViewKind.NO_VIEW
    elif not isinstance(view, ViewKind):
        view = ViewKind(view)

    payload = raw.get("payload") or {}
    return Event(
        session_id=str(raw["session_id"]),
        ip_hash=str(raw.get("ip_hash") or ""),
        timestamp=ts,
        name=name,
        category=type_def.category,
        view=view,
        payload=dict(payload),
    )


def _vis(name: str, intent: IntentGroup = IntentGroup.NONE,
         views: frozenset[ViewKind] = ALL_VIEWS) -> EventTypeDef:
    return EventTypeDef(name, EventCategory.VISUALIZATION_INTERACTION, intent, views)


def _help(name: str, kind: HelpResourceKind) -> EventTypeDef:
    return EventTypeDef(name, EventCategory.SUPPORT_HELP, help_kind=kind)


def default_registry() -> EventRegistry:
    """The canonical shipped registry: 36 event names across all 7 categories."""
    reg = EventRegistry()
    V = ViewKind
    for d in [
        # DataManagement
        EventTypeDef("upload_own_data", EventCategory.DATA_MANAGEMENT),
        EventTypeDef("load_demo_data", EventCategory.DATA_MANAGEMENT),
        EventTypeDef("create_network_attempt", EventCategory.DATA_MANAGEMENT),
        EventTypeDef("create_network_success", EventCategory.DATA_MANAGEMENT),
        EventTypeDef("create_network_failure", EventCategory.DATA_MANAGEMENT),
        EventTypeDef("delete_network", EventCategory.DATA_MANAGEMENT),
        EventTypeDef("edit_network_schema", EventCategory.DATA_MANAGEMENT),
        # VisualizationInteraction: view openers first, one per view
        _vis("open_nodelink", views=frozenset({V.NODE_LINK})),
        _vis("open_matrix", views=frozenset({V.MATRIX})),
        _vis("open_timeline", views=frozenset({V.TIMELINE})),
        _vis("open_map", views=frozenset({V.MAP})),
        _vis("open_coordinated", views=frozenset({V.COORDINATED})),
        _vis("time_slider", IntentGroup.DATA_FILTERING),
        _vis("filter_node_type", IntentGroup.DATA_FILTERING),
        _vis("filter_link_type", IntentGroup.DATA_FILTERING),
        _vis("search_label", IntentGroup.DATA_FILTERING),
        _vis("matrix_reorder", IntentGroup.REPRESENTATION_CHANGE,
             frozenset({V.MATRIX, V.COORDINATED})),
        _vis("change_encoding", IntentGroup.REPRESENTATION_CHANGE),
        _vis("hover_node"),
        _vis("hover_link"),
        _vis("select_node"),
        _vis("select_link"),
        _vis("drag_node", views=frozenset({V.NODE_LINK, V.COORDINATED})),
        _vis("pan_zoom"),
        _vis("clear_selection"),
        # SupportHelp
        _help("help_examples", HelpResourceKind.EXAMPLES),
        _help("help_tutorial", HelpResourceKind.TUTORIALS),
        _help("help_video", HelpResourceKind.VIDEOS),
        _help("help_demo", HelpResourceKind.DEMOS),
        _help("help_data_formatting", HelpResourceKind.DATA_FORMATTING),
        # Communication
        EventTypeDef("contact_team", EventCategory.COMMUNICATION),
        # Bookmark
        EventTypeDef("bookmark_create", EventCategory.BOOKMARK),
        EventTypeDef("bookmark_annotate", EventCategory.BOOKMARK),
        EventTypeDef("bookmark_open", EventCategory.BOOKMARK),
        # ErrorTracking
        EventTypeDef("error_report", EventCategory.ERROR_TRACKING),
        # ActivityLogs
        EventTypeDef("feedback_submit", EventCategory.ACTIVITY_LOGS),
    ]:
        reg.register(d)
    return reg
