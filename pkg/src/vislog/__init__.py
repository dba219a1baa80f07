"""vislog: interaction-log analytics for visualization tools.

Pipeline: ingest .vlog files -> stitch sessions into users -> segment visits
-> classify user types -> compute KPI bundles -> serve the dashboard API.
"""

from .classifier import UserSignals, UserType, classify_corpus, classify_user, extract_signals
from .event_model import (
    Event,
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
from .ingest import IngestReport, SessionFile, ingest_path, parse_log_line
from .kpis import (
    Annotation,
    AnnotationKind,
    DwellParams,
    OverviewKpis,
    VisualizationKpis,
    overview_kpis,
    visualization_kpis,
)
from .sessionizer import (
    Corpus,
    StitchParams,
    UserRecord,
    Visit,
    resolve_corpus,
    segment_visits,
    stitch_sessions,
)
from .simgen import GeneratorSpec, GroundTruth, generate_corpus, write_corpus
from .timeline import Timeline, TimelineBlock, ViewSegment, build_timeline, merge_blocks, view_segments

__all__ = [name for name in dir() if not name.startswith("_")]
