import pytest

from vislog.event_model import default_registry, validate_event
from vislog.ingest import SessionFile


@pytest.fixture(scope="session")
def registry():
    return default_registry()


@pytest.fixture
def ev(registry):
    def make(name, ts, sid="s1", ip="h1", view=None):
        return validate_event(
            {"session_id": sid, "ip_hash": ip, "timestamp": ts, "name": name, "view": view},
            registry,
        )

    return make


@pytest.fixture
def session_of(ev):
    def make(sid, ip, names_and_ts):
        events = tuple(ev(name, ts, sid=sid, ip=ip) for name, ts in names_and_ts)
        return SessionFile(session_id=sid, ip_hash=ip, events=events)

    return make
