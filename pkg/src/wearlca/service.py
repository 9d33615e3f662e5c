"""Read-mostly HTTP API over datasets, wear profiles and what-if LCA runs.

Every response is a pure function of workspace content and request body;
what-if evaluation reuses the exact scenario builders and factor table the
CLI uses, so numbers agree across both interfaces bit for bit.
"""

from __future__ import annotations

import hashlib
from pathlib import Path
from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from . import analytics
from .core import Role, load_manifest, load_mask, validate_manifest
from .errors import WearLcaError
from .lca import (
    FactorTable,
    anode_scenario,
    characterize,
    compare,
    load_factor_table,
    machining_scenario,
)

LIFESPAN_RANGE = (1.0, 2.0)
SPEED_RANGE = (1.0, 1.5)


class MachiningParams(BaseModel):
    lifespan_factor: float = 1.0
    speed_factor: float = 1.0
    cv_assisted: bool = True


class AnodeParams(BaseModel):
    market: Literal["eu", "noneu"] = "eu"
    remanufacture: bool = True


class WhatIfRequest(BaseModel):
    case: Literal["machining", "anode"]
    parameters: dict = {}


class WorkspaceIndex:
    """Manifest directory scan with content-hash-keyed caches."""

    def __init__(self, root: Path):
        self.root = Path(root)
        self._manifests: dict[str, tuple[str, object]] = {}
        self._summaries: dict[tuple[str, str, str], dict] = {}

    def _digest(self, path: Path) -> str:
        return hashlib.sha256(path.read_bytes()).hexdigest()

    def manifest_paths(self) -> dict[str, Path]:
        if not self.root.is_dir():
            raise FileNotFoundError(f"workspace {self.root} is not a directory")
        paths = {}
        for p in sorted(self.root.glob("*.json")) + sorted(self.root.glob("*/manifest.json")):
            dataset_id = p.stem if p.name != "manifest.json" else p.parent.name
            paths.setdefault(dataset_id, p)
        return paths

    def manifest(self, dataset_id: str):
        path = self.manifest_paths().get(dataset_id)
        if path is None:
            raise KeyError(dataset_id)
        digest = self._digest(path)
        cached = self._manifests.get(dataset_id)
        if cached and cached[0] == digest:
            return cached[1]
        manifest = load_manifest(path)
        self._manifests[dataset_id] = (digest, manifest)
        return manifest

    def summary(self, dataset_id: str, record) -> dict:
        digest = self._digest(Path(record.gt))
        key = (dataset_id, record.image_id, digest)
        if key not in self._summaries:
            mask = load_mask(record.gt, self.manifest(dataset_id).class_map)
            summary = analytics.summarize(mask, record.image_id)
            self._summaries[key] = analytics.summary_to_dict(
                summary, mask.class_map
            )
        return self._summaries[key]


def _class_map_payload(class_map) -> dict:
    return {
        "family": class_map.family.value,
        "classes": [
            {"class_id": c.class_id, "name": c.name, "display_color": list(c.display_color)}
            for c in class_map.classes
        ],
    }


def _check_range(name: str, value: float, lo: float, hi: float):
    if not lo <= value <= hi:
        raise HTTPException(
            status_code=422,
            detail=f"{name} {value} outside validated range [{lo}, {hi}]",
        )


def create_app(
    workspace_dir, factors_csv: Optional[str] = None, ui_dir: Optional[str] = None
) -> FastAPI:
    app = FastAPI(title="wearlca service")
    index = WorkspaceIndex(Path(workspace_dir))
    table: FactorTable = load_factor_table(factors_csv=factors_csv)

    @app.get("/api/datasets")
    def list_datasets():
        descriptors = []
        try:
            paths = index.manifest_paths()
        except FileNotFoundError as exc:
            raise HTTPException(status_code=500, detail=str(exc))
        for dataset_id in sorted(paths):
            try:
                manifest = index.manifest(dataset_id)
                counts = validate_manifest(manifest)
                descriptors.append(
                    {
                        "id": dataset_id,
                        "family": manifest.class_map.family.value,
                        "split_counts": {
                            "train": counts.train,
                            "validation": counts.validation,
                            "test": counts.test,
                        },
                    }
                )
            except WearLcaError as exc:
                descriptors.append({"id": dataset_id, "error": str(exc)})
        return descriptors

    @app.get("/api/datasets/{dataset_id}/profile")
    def get_profile(dataset_id: str):
        try:
            manifest = index.manifest(dataset_id)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"unknown dataset {dataset_id}")
        except WearLcaError as exc:
            raise HTTPException(status_code=500, detail=str(exc))
        try:
            summaries = [
                analytics.summarize(load_mask(r.gt, manifest.class_map), r.image_id)
                for r in manifest.records
            ]
            profile = analytics.aggregate(summaries)
        except WearLcaError as exc:
            raise HTTPException(status_code=500, detail=str(exc))
        return {
            "profile": analytics.profile_to_dict(profile, manifest.class_map),
            "summaries": [
                analytics.summary_to_dict(s, manifest.class_map) for s in summaries
            ],
            "class_map": _class_map_payload(manifest.class_map),
        }

    @app.get("/api/datasets/{dataset_id}/images/{image_id}")
    def get_image(dataset_id: str, image_id: str):
        try:
            manifest = index.manifest(dataset_id)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"unknown dataset {dataset_id}")
        record = next((r for r in manifest.records if r.image_id == image_id), None)
        if record is None:
            raise HTTPException(status_code=404, detail=f"unknown image {image_id}")
        try:
            gt = load_mask(record.gt, manifest.class_map)
            pred = (
                load_mask(record.pred, manifest.class_map) if record.pred else None
            )
            payload = {
                "image_id": image_id,
                "role": record.role.value,
                "image": str(record.gt),
                "gt_mask": gt.labels.tolist(),
                "pred_mask": pred.labels.tolist() if pred is not None else None,
                "summary": index.summary(dataset_id, record),
                "class_map": _class_map_payload(manifest.class_map),
            }
        except WearLcaError as exc:
            raise HTTPException(status_code=500, detail=str(exc))
        if record.patch_offset is not None:
            payload["patch_offset"] = list(record.patch_offset)
        if record.track_id is not None:
            payload["track_id"] = record.track_id
        return payload

    @app.post("/api/lca/whatif")
    def whatif(request: WhatIfRequest):
        if request.case == "machining":
            params = MachiningParams(**request.parameters)
            _check_range("lifespan_factor", params.lifespan_factor, *LIFESPAN_RANGE)
            _check_range("speed_factor", params.speed_factor, *SPEED_RANGE)
            scenario = machining_scenario(
                params.lifespan_factor, params.speed_factor, params.cv_assisted
            )
            baseline = machining_scenario(1.0, 1.0, False, "machining:baseline")
        else:
            params = AnodeParams(**request.parameters)
            scenario = anode_scenario(params.market, params.remanufacture)
            baseline = anode_scenario(params.market, False)
        if scenario.scenario_id == baseline.scenario_id:
            scenario = type(scenario)(
                scenario_id=scenario.scenario_id + ":whatif",
                functional_unit=scenario.functional_unit,
                inventory=scenario.inventory,
                assumptions=scenario.assumptions,
                credited_flow_ids=scenario.credited_flow_ids,
            )
        base_result = characterize(baseline, table)
        result = characterize(scenario, table)
        comparison = compare([base_result, result], baseline.scenario_id)
        return {
            "scenario_id": result.scenario_id,
            "baseline_id": baseline.scenario_id,
            "impacts": result.impacts,
            "baseline_impacts": base_result.impacts,
            "absolute_delta": comparison.absolute_delta[result.scenario_id],
            "percent_delta": comparison.percent_delta[result.scenario_id],
            "impact_transfer": comparison.impact_transfer[result.scenario_id],
            "assumptions": [
                {"key": a.key, "value": a.value, "provenance": a.provenance}
                for a in result.assumptions
            ],
        }

    if ui_dir is None:
        default_ui = Path(__file__).resolve().parents[2] / "frontend" / "dist"
        ui_dir = str(default_ui) if default_ui.is_dir() else None
    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
