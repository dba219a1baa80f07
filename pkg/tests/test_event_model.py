import pytest

from vislog.errors import DuplicateName, MissingField, NonPositiveTimestamp, UnknownEventName
from vislog.event_model import (
    EventCategory,
    EventRegistry,
    EventTypeDef,
    HelpResourceKind,
    IntentGroup,
    ViewKind,
    default_registry,
    intent_group_of,
    validate_event,
)


def test_register_and_lookup_roundtrip():
    reg = EventRegistry()
    d = EventTypeDef(
        "open_nodelink",
        EventCategory.VISUALIZATION_INTERACTION,
        view_scope=frozenset({ViewKind.NODE_LINK}),
    )
    reg.register(d)
    assert reg.get("open_nodelink") is d


def test_register_duplicate_rejected():
    reg = EventRegistry()
    d = EventTypeDef("hover_node", EventCategory.VISUALIZATION_INTERACTION)
    reg.register(d)
    with pytest.raises(DuplicateName):
        reg.register(d)


def test_default_registry_covers_all_seven_categories():
    reg = default_registry()
    categories = {d.category for d in reg}
    assert categories == set(EventCategory)


def test_default_registry_partition_is_exhaustive_and_exclusive():
    reg = default_registry()
    # every def has exactly one category, names unique
    names = [d.name for d in reg]
    assert len(names) == len(set(names))
    for d in reg:
        assert isinstance(d.category, EventCategory)


def test_intent_group_only_on_visualization_events():
    with pytest.raises(ValueError):
        EventTypeDef("upload_own_data", EventCategory.DATA_MANAGEMENT,
                     intent_group=IntentGroup.DATA_FILTERING)


def test_help_kind_only_on_support_events():
    with pytest.raises(ValueError):
        EventTypeDef("hover_node", EventCategory.VISUALIZATION_INTERACTION,
                     help_kind=HelpResourceKind.VIDEOS)
    for d in default_registry():
        if d.help_kind is not HelpResourceKind.NONE:
            assert d.category is EventCategory.SUPPORT_HELP


@pytest.mark.parametrize(
    ("name", "expected"),
    [
        ("time_slider", IntentGroup.DATA_FILTERING),
        ("matrix_reorder", IntentGroup.REPRESENTATION_CHANGE),
        ("upload_own_data", IntentGroup.NONE),
    ],
)
def test_intent_group_of(registry, name, expected):
    assert intent_group_of(name, registry) is expected


def test_intent_group_of_unknown_name(registry):
    with pytest.raises(UnknownEventName):
        intent_group_of("zzz_unknown", registry)


def test_validate_event_fills_category_and_view(registry):
    e = validate_event(
        {"session_id": "s1", "ip_hash": "h1", "timestamp": 1000, "name": "open_nodelink"},
        registry,
    )
    assert e.category is EventCategory.VISUALIZATION_INTERACTION
    assert e.view is ViewKind.NODE_LINK


def test_validate_event_defaults_to_noview(registry):
    e = validate_event(
        {"session_id": "s1", "ip_hash": "h1", "timestamp": 1000, "name": "hover_node"},
        registry,
    )
    assert e.view is ViewKind.NO_VIEW


def test_validate_event_unknown_name(registry):
    with pytest.raises(UnknownEventName):
        validate_event(
            {"session_id": "s1", "ip_hash": "h1", "timestamp": 1000, "name": "zzz_unknown"},
            registry,
        )


def test_validate_event_missing_fields(registry):
    with pytest.raises(MissingField):
        validate_event({"ip_hash": "h1", "timestamp": 1000, "name": "hover_node"}, registry)
    with pytest.raises(MissingField):
        validate_event({"session_id": "s1", "ip_hash": "h1", "name": "hover_node"}, registry)


def test_validate_event_nonpositive_timestamp(registry):
    with pytest.raises(NonPositiveTimestamp):
        validate_event(
            {"session_id": "s1", "ip_hash": "h1", "timestamp": 0, "name": "hover_node"},
            registry,
        )


def test_validate_event_is_deterministic(registry):
    raw = {"session_id": "s1", "ip_hash": "h1", "timestamp": 1000, "name": "open_matrix"}
    assert validate_event(raw, registry) == validate_event(raw, registry)


def test_registry_config_roundtrip(tmp_path):
    reg = default_registry()
    path = tmp_path / "registry.json"
    import json

    path.write_text(json.dumps(reg.to_records()))
    loaded = EventRegistry.from_config(path)
    assert loaded.to_records() == reg.to_records()


def test_registry_iteration_is_insertion_ordered():
    reg = EventRegistry()
    reg.register(EventTypeDef("zz_last", EventCategory.BOOKMARK))
    reg.register(EventTypeDef("aa_first", EventCategory.BOOKMARK))
    assert [d.name for d in reg] == ["zz_last", "aa_first"]
