"""Batch command-line entry point.

Subcommands: evaluate (metric reports from a manifest), profile
(cross-tool wear profile), lca (run and compare scenarios), serve (HTTP
API). Exit codes: 2 for invalid input, 3 for a computation failure.
Outputs are byte-identical across reruns on identical inputs.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from . import analytics
from .core import Role, load_manifest, load_mask, validate_manifest
from .errors import WearLcaError
from .lca import (
    characterize,
    compare,
    load_factor_table,
    named_scenario,
    scenario_from_spec,
    write_comparison_json,
    write_impacts_csv,
)
from .metrics import dataset_metrics, write_report_csv, write_report_json

FACTORS_ENV = "WEARLCA_FACTORS"


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _resolve_factors(factors_option):
    if factors_option:
        return factors_option
    return os.environ.get(FACTORS_ENV) or None


@click.group()
def main():
    """Wear-mask analytics and LCA toolkit."""


@main.command()
@click.option("--manifest", "manifest_path", required=True, type=click.Path())
@click.option("--out", "out_dir", required=True, type=click.Path(file_okay=False))
@click.option(
    "--format", "fmt", type=click.Choice(["json", "csv", "both"]), default="both"
)
@click.option(
    "--mode", type=click.Choice(["pooled", "per_image"]), default="pooled"
)
def evaluate(manifest_path, out_dir, fmt, mode):
    """Compute metric reports over the manifest's test split."""
    try:
        manifest = load_manifest(manifest_path)
        validate_manifest(manifest)
    except WearLcaError as exc:
        _fail(2, str(exc))
    test_records = [r for r in manifest.records if r.role is Role.TEST]
    if not test_records:
        _fail(2, "manifest has no test-role records")
    for rec in test_records:
        if rec.pred is None:
            _fail(2, f"no prediction for image_id {rec.image_id}")
    try:
        pairs = [
            (load_mask(r.pred, manifest.class_map), load_mask(r.gt, manifest.class_map))
            for r in test_records
        ]
        report = dataset_metrics(pairs, manifest.class_map, mode=mode)
    except WearLcaError as exc:
        _fail(3, str(exc))
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if fmt in ("json", "both"):
        write_report_json(report, out / "report.json")
    if fmt in ("csv", "both"):
        write_report_csv(report, out / "report.csv")
    click.echo(f"mean_dsc={report.mean_dsc:.6f} pixel_accuracy={report.pixel_accuracy:.6f}")


@main.command()
@click.option("--manifest", "manifest_path", required=True, type=click.Path())
@click.option("--out", "out_dir", required=True, type=click.Path(file_okay=False))
def profile(manifest_path, out_dir):
    """Aggregate ground-truth masks into a process wear profile."""
    try:
        manifest = load_manifest(manifest_path)
        validate_manifest(manifest)
        if not manifest.records:
            _fail(2, "manifest is empty")
        summaries = [
            analytics.summarize(load_mask(r.gt, manifest.class_map), r.image_id)
            for r in manifest.records
        ]
        prof = analytics.aggregate(summaries)
    except WearLcaError as exc:
        _fail(2, str(exc))
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    analytics.write_profile_json(prof, manifest.class_map, out / "profile.json")
    analytics.write_summary_csv(summaries, manifest.class_map, out / "summary.csv")
    click.echo(f"n_tools={prof.n_tools}")


@main.command()
@click.option(
    "--scenario",
    "scenario_names",
    multiple=True,
    required=True,
    help="Named scenario (e.g. machining:baseline) or a scenario.json path.",
)
@click.option("--out", "out_dir", required=True, type=click.Path(file_okay=False))
@click.option("--factors", "factors_path", type=click.Path(), default=None)
@click.option("--baseline", "baseline_id", default=None)
def lca(scenario_names, out_dir, factors_path, baseline_id):
    """Characterize scenarios; with several, also write a comparison."""
    try:
        table = load_factor_table(factors_csv=_resolve_factors(factors_path))
        scenarios = []
        for name in scenario_names:
            if name.endswith(".json"):
                scenarios.append(
                    scenario_from_spec(json.loads(Path(name).read_text()))
                )
            else:
                scenarios.append(named_scenario(name))
        results = [characterize(s, table) for s in scenarios]
    except (WearLcaError, OSError, json.JSONDecodeError, KeyError) as exc:
        _fail(2, str(exc))
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_impacts_csv(results, out / "impacts.csv")
    if len(results) > 1:
        base_id = baseline_id or results[0].scenario_id
        try:
            comparison = compare(results, base_id)
        except WearLcaError as exc:
            _fail(2, str(exc))
        write_comparison_json(results, comparison, out / "comparison.json")
    for r in results:
        click.echo(f"{r.scenario_id}: global_warming={r.impacts['global_warming']!r}")


@main.command()
@click.option("--workspace", "workspace_dir", required=True, type=click.Path(file_okay=False))
@click.option("--serve-port", "port", default=8080, show_default=True)
@click.option("--factors", "factors_path", type=click.Path(), default=None)
@click.option("--ui-dir", type=click.Path(file_okay=False), default=None)
def serve(workspace_dir, port, factors_path, ui_dir):
    """Serve the HTTP API (and the UI bundle, when built) on --serve-port."""
    import uvicorn

    from .service import create_app

    app = create_app(
        workspace_dir, factors_csv=_resolve_factors(factors_path), ui_dir=ui_dir
    )
    uvicorn.run(app, host="127.0.0.1", port=port)


if __name__ == "__main__":
    main()
