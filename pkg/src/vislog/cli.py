"""Command-line entry points: ingest, report, simgen, serve, registry."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .classifier import UserType, classify_corpus
from .errors import IoFailure, StoreMissing
from .event_model import EventRegistry, default_registry
from .kpis import DwellParams, load_annotations, overview_kpis
from .sessionizer import StitchParams, resolve_corpus
from .simgen import GeneratorSpec, write_corpus
from .store import build_store, load_store, save_store


def _registry(config: str | None) -> EventRegistry:
    return EventRegistry.from_config(config) if config else default_registry()


def _stitch_params(stitch_gap_ms: int, visit_gap_ms: int) -> StitchParams:
    return StitchParams(stitch_gap_ms=stitch_gap_ms, visit_gap_ms=visit_gap_ms)


gap_options = [
    click.option("--stitch-gap-ms", default=60_000, show_default=True,
                 envvar="VISLOG_STITCH_GAP_MS"),
    click.option("--visit-gap-ms", default=1_200_000, show_default=True,
                 envvar="VISLOG_VISIT_GAP_MS"),
]


def with_gap_options(fn):
    for opt in reversed(gap_options):
        fn = opt(fn)
    return fn


@click.group()
def main() -> None:
    """Interaction-log analytics: ingest logs, report KPIs, serve the dashboard API."""


@main.command()
@click.argument("paths", nargs=-1, required=True, type=click.Path())
@click.option("--store", "store_path", default="vislog_store.json", show_default=True,
              envvar="VISLOG_STORE")
@click.option("--registry-config", default=None, envvar="VISLOG_REGISTRY_CONFIG")
def ingest(paths: tuple[str, ...], store_path: str, registry_config: str | None) -> None:
    """Parse .vlog files/directories into a persisted analysis store."""
    registry = _registry(registry_config)
    try:
        store = build_store(list(paths), registry)
    except IoFailure as exc:
        click.echo(f"error: unreadable path: {exc}", err=True)
        sys.exit(1)
    save_store(store, store_path)
    r = store["report"]
    click.echo(f"files read:      {r['files_read']}")
    click.echo(f"events accepted: {r['events_accepted']}")
    click.echo(f"events rejected: {r['events_rejected']}")
    for reason, count in sorted(r["reject_reasons"].items()):
        click.echo(f"  {reason}: {count}")
    click.echo(f"store written:   {store_path}")


#: CSV report columns, stable across releases: metric,key,value
CSV_HEADER = "metric,key,value"


@main.command()
@click.option("--store", "store_path", default="vislog_store.json", show_default=True,
              envvar="VISLOG_STORE")
@click.option("--format", "fmt", type=click.Choice(["text", "csv"]), default="text",
              show_default=True)
@click.option("--annotations", "annotations_path", default=None, envvar="VISLOG_ANNOTATIONS")
@click.option("--registry-config", default=None, envvar="VISLOG_REGISTRY_CONFIG")
@click.option("--top-n", default=10, show_default=True)
@with_gap_options
def report(store_path: str, fmt: str, annotations_path: str | None,
           registry_config: str | None, top_n: int,
           stitch_gap_ms: int, visit_gap_ms: int) -> None:
    """Print the overview KPI suite for a persisted store."""
    registry = _registry(registry_config)
    try:
        sessions, _ = load_store(store_path, registry)
    except StoreMissing as exc:
        click.echo(f"error: store missing: {exc}", err=True)
        sys.exit(1)
    annotations = load_annotations(annotations_path) if annotations_path else []
    corpus = resolve_corpus(sessions, _stitch_params(stitch_gap_ms, visit_gap_ms))
    types, counts = classify_corpus(corpus)
    kpis = overview_kpis(corpus, types, counts, registry, annotations, top_n=top_n)

    if fmt == "csv":
        lines = [CSV_HEADER]
        lines.append(f"total_users,,{kpis.total_users}")
        for t in UserType:
            lines.append(f"type_count,{t.value},{kpis.type_counts[t]}")
        for month, count in kpis.monthly_visits:
            lines.append(f"monthly_visits,{month},{count}")
        lines.append(f"returning_rate,,{kpis.returning_rate:.6f}")
        for t, summary in kpis.session_length_dist.items():
            if summary is not None:
                lines.append(f"session_length_mean_s,{t.value},{summary.mean:.3f}")
                lines.append(f"session_length_median_s,{t.value},{summary.median:.3f}")
        for name, count in kpis.feature_frequency:
            lines.append(f"feature_frequency,{name},{count}")
        for t, row in kpis.help_usage.items():
            for kind, count in row.items():
                lines.append(f"help_usage,{t.value}:{kind.value},{count}")
        for t, row in kpis.time_by_type.items():
            lines.append(f"time_total_s,{t.value},{row['total_s']:.3f}")
            lines.append(f"time_mean_s,{t.value},{row['mean_s']:.3f}")
        click.echo("\n".join(lines))
        return

    click.echo(f"Total users: {kpis.total_users}")
    click.echo("User types:")
    for t in UserType:
        click.echo(f"  {t.value}: {kpis.type_counts[t]}")
    click.echo(f"Returning rate: {kpis.returning_rate:.1%}")
    click.echo("Monthly visits:")
    for month, count, anns in kpis.annotated_trend:
        suffix = "" if not anns else "  [" + "; ".join(a.label for a in anns) + "]"
        click.echo(f"  {month}: {count}{suffix}")
    click.echo("Session length by type, seconds:")
    for t, summary in kpis.session_length_dist.items():
        if summary is None:
            click.echo(f"  {t.value}: no visits")
        else:
            click.echo(
                f"  {t.value}: min={summary.min:.0f} median={summary.median:.0f} "
                f"mean={summary.mean:.1f} max={summary.max:.0f}"
            )
    click.echo(f"Top features: " + ", ".join(
        f"{n}×{c}" for n, c in kpis.feature_frequency))
    click.echo("Help usage by type:")
    for t, row in kpis.help_usage.items():
        used = {k.value: c for k, c in row.items() if c}
        click.echo(f"  {t.value}: {used or '-'}")
    click.echo("Time by type, seconds:")
    for t, row in kpis.time_by_type.items():
        click.echo(f"  {t.value}: total={row['total_s']:.0f} mean={row['mean_s']:.1f}")


@main.command()
@click.option("--spec", "spec_path", default=None, help="Generator spec JSON; defaults are used if omitted.")
@click.option("--out", "out_dir", required=True, type=click.Path())
@click.option("--seed", default=None, type=int, help="Override the spec seed.")
def simgen(spec_path: str | None, out_dir: str, seed: int | None) -> None:
    """Generate a synthetic labeled corpus of .vlog files plus ground_truth.json."""
    spec = GeneratorSpec.from_config(spec_path) if spec_path else GeneratorSpec()
    if seed is not None:
        from dataclasses import replace
        spec = replace(spec, seed=seed)
    truth = write_corpus(spec, out_dir)
    click.echo(f"generated {len(truth.users)} users into {out_dir}")


@main.command()
@click.option("--store", "store_path", default="vislog_store.json", show_default=True,
              envvar="VISLOG_STORE")
@click.option("--bind", default="127.0.0.1:8000", show_default=True, envvar="VISLOG_BIND")
@click.option("--annotations", "annotations_path", default=None, envvar="VISLOG_ANNOTATIONS")
@click.option("--registry-config", default=None, envvar="VISLOG_REGISTRY_CONFIG")
@click.option("--cors-origin", "cors_origins", multiple=True, envvar="VISLOG_CORS_ORIGIN")
@with_gap_options
def serve(store_path: str, bind: str, annotations_path: str | None,
          registry_config: str | None, cors_origins: tuple[str, ...],
          stitch_gap_ms: int, visit_gap_ms: int) -> None:
    """Serve the read-only dashboard API."""
    import uvicorn

    from .api import create_app

    host, _, port = bind.rpartition(":")
    app = create_app(
        store_path,
        registry=_registry(registry_config),
        params=_stitch_params(stitch_gap_ms, visit_gap_ms),
        dwell=DwellParams(),
        annotations_path=annotations_path,
        cors_origins=list(cors_origins) or None,
    )
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port))


@main.command()
@click.option("--registry-config", default=None, envvar="VISLOG_REGISTRY_CONFIG")
def registry(registry_config: str | None) -> None:
    """Dump the event type registry as JSON."""
    click.echo(json.dumps(_registry(registry_config).to_records(), indent=2))


if __name__ == "__main__":
    main()
