"""Decision-grade wear statistics over segmentation masks.

Per-image summaries (class fractions, connected regions, wear extent),
cross-tool aggregates over many images from the same process, patch
stitching for very large microscope captures, and linear extrapolation
from a sampled area to the full focal track of a rotating anode.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy import ndimage

from .core import ClassMap, ProductFamily, SegmentationMask
from .errors import (
    DuplicateImageId,
    EmptyInput,
    MixedFamilies,
    NonPositiveCoverage,
    PatchOutOfBounds,
)

# 4-connectivity: conservative separation of crack networks
_STRUCTURE_4 = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=bool)

HISTOGRAM_BINS = 10


@dataclass(frozen=True)
class WearSummary:
    image_id: str
    family: ProductFamily
    pixel_counts: dict[int, int]  # per class, all pixels
    counted_pixels: int  # support of the fractions (non-background for tools)
    fractions: dict[int, float]
    region_count: dict[int, int]
    largest_region_area: dict[int, int]
    wear_extent: int | None  # machining only: max per-column wear run length
    total_pixels: int


@dataclass(frozen=True)
class ClassStats:
    minimum: float
    maximum: float
    mean: float
    median: float
    std: float
    incidence: float
    histogram: tuple[int, ...]  # HISTOGRAM_BINS equal-width bins over [0, 1]


@dataclass(frozen=True)
class ProcessWearProfile:
    family: ProductFamily
    n_tools: int
    per_class: dict[int, ClassStats]


@dataclass(frozen=True)
class FocalTrackEstimate:
    sampled_area_px: int
    coverage_fraction: float
    pixel_pitch: float  # physical length per pixel
    sampled_class_area: dict[int, float]  # physical units
    estimated_class_area: dict[int, float]  # physical units, full track
    assumption: str


def _max_column_run(wear: np.ndarray) -> int:
    """Longest vertical run of True per column, maximized over columns."""
    if not wear.any():
        return 0
    best = 0
    for col in wear.T:
        run = 0
        longest = 0
        for v in col:
            run = run + 1 if v else 0
            longest = max(longest, run)
        best = max(best, longest)
    return best


def summarize(mask: SegmentationMask, image_id: str = "") -> WearSummary:
    """Per-image wear statistics; regions use 4-connectivity."""
    cm = mask.class_map
    counts = mask.class_pixel_counts()
    pixel_counts = {c: int(counts[c]) for c in range(cm.n_classes)}

    if cm.family is ProductFamily.MACHINING_TOOL:
        support_classes = range(1, cm.n_classes)
    else:
        support_classes = range(cm.n_classes)
    counted = sum(pixel_counts[c] for c in support_classes)
    fractions = {
        c: (pixel_counts[c] / counted if counted else 0.0) for c in support_classes
    }

    region_count = {}
    largest = {}
    for c in support_classes:
        labeled, n = ndimage.label(mask.labels == c, structure=_STRUCTURE_4)
        region_count[c] = int(n)
        if n:
            areas = np.bincount(labeled.ravel())[1:]
            largest[c] = int(areas.max())
        else:
            largest[c] = 0

    extent = None
    if cm.family is ProductFamily.MACHINING_TOOL:
        extent = _max_column_run(mask.labels != 0)

    return WearSummary(
        image_id=image_id,
        family=cm.family,
        pixel_counts=pixel_counts,
        counted_pixels=counted,
        fractions=fractions,
        region_count=region_count,
        largest_region_area=largest,
        wear_extent=extent,
        total_pixels=mask.n_pixels,
    )


def _lower_median(values: np.ndarray) -> float:
    return float(np.sort(values)[(len(values) - 1) // 2])


def aggregate(summaries: list[WearSummary]) -> ProcessWearProfile:
    """Order-invariant statistics over per-image summaries of one family."""
    if not summaries:
        raise EmptyInput("no summaries")
    family = summaries[0].family
    seen = set()
    for s in summaries:
        if s.family is not family:
            raise MixedFamilies(f"{s.image_id}: {s.family} vs {family}")
        if s.image_id in seen:
            raise DuplicateImageId(s.image_id)
        seen.add(s.image_id)

    ordered = sorted(summaries, key=lambda s: s.image_id)
    per_class = {}
    for c in ordered[0].fractions:
        vals = np.array([s.fractions[c] for s in ordered], dtype=np.float64)
        present = np.array([s.pixel_counts[c] > 0 for s in ordered])
        hist, _ = np.histogram(vals, bins=HISTOGRAM_BINS, range=(0.0, 1.0))
        per_class[c] = ClassStats(
            minimum=float(vals.min()),
            maximum=float(vals.max()),
            mean=float(vals.mean()),
            median=_lower_median(vals),
            std=float(vals.std()),
            incidence=float(present.mean()),
            histogram=tuple(int(v) for v in hist),
        )
    return ProcessWearProfile(family=family, n_tools=len(ordered), per_class=per_class)


@dataclass(frozen=True)
class StitchResult:
    mask: SegmentationMask
    uncovered_pixels: int
    overlap_pixels: int


def stitch(
    patches: list[tuple[SegmentationMask, tuple[int, int]]],
    canvas_width: int,
    canvas_height: int,
) -> StitchResult:
    """Compose patches onto a class-0 canvas; later patches win on overlap."""
    if not patches:
        raise EmptyInput("no patches")
    cm = patches[0][0].class_map
    canvas = np.zeros((canvas_height, canvas_width), dtype=np.uint8)
    covered = np.zeros((canvas_height, canvas_width), dtype=bool)
    overlap = 0
    for mask, (x, y) in patches:
        if x < 0 or y < 0 or x + mask.width > canvas_width or y + mask.height > canvas_height:
            raise PatchOutOfBounds(
                f"patch {mask.width}x{mask.height} at ({x},{y}) "
                f"outside {canvas_width}x{canvas_height} canvas"
            )
        window = (slice(y, y + mask.height), slice(x, x + mask.width))
        overlap += int(covered[window].sum())
        canvas[window] = mask.labels
        covered[window] = True
    return StitchResult(
        mask=SegmentationMask(labels=canvas, class_map=cm),
        uncovered_pixels=int((~covered).sum()),
        overlap_pixels=overlap,
    )


LINEAR_EXTRAPOLATION_NOTE = (
    "Linear scale-up assumes the sampled patches are representative of the "
    "full focal track (expert-chosen sampling; uniformity is an input "
    "assumption, not a measured property)."
)


def extrapolate(
    summary: WearSummary, coverage_fraction: float, pixel_pitch: float
) -> FocalTrackEstimate:
    """Scale sampled class areas to the full track by 1/coverage_fraction.

    ``pixel_pitch`` is the physical edge length of one pixel; areas come
    back in pixel_pitch**2 units.
    """
    if not coverage_fraction > 0:
        raise NonPositiveCoverage(f"coverage_fraction {coverage_fraction} must be > 0")
    if coverage_fraction > 1:
        raise NonPositiveCoverage("coverage_fraction must be <= 1")
    if pixel_pitch <= 0:
        raise ValueError("pixel_pitch must be positive")
    area_per_px = pixel_pitch * pixel_pitch
    sampled = {c: summary.pixel_counts[c] * area_per_px for c in summary.fractions}
    estimated = {c: sampled[c] / coverage_fraction for c in sampled}
    return FocalTrackEstimate(
        sampled_area_px=summary.total_pixels,
        coverage_fraction=coverage_fraction,
        pixel_pitch=pixel_pitch,
        sampled_class_area=sampled,
        estimated_class_area=estimated,
        assumption=LINEAR_EXTRAPOLATION_NOTE,
    )


# ---------------------------------------------------------------------------
# serialization


def summary_to_dict(s: WearSummary, class_map: ClassMap) -> dict:
    return {
        "image_id": s.image_id,
        "family": s.family.value,
        "total_pixels": s.total_pixels,
        "counted_pixels": s.counted_pixels,
        "pixel_counts": {class_map.name_of(c): v for c, v in s.pixel_counts.items()},
        "fractions": {class_map.name_of(c): v for c, v in s.fractions.items()},
        "region_count": {class_map.name_of(c): v for c, v in s.region_count.items()},
        "largest_region_area": {
            class_map.name_of(c): v for c, v in s.largest_region_area.items()
        },
        "wear_extent": s.wear_extent,
    }


def profile_to_dict(profile: ProcessWearProfile, class_map: ClassMap) -> dict:
    return {
        "family": profile.family.value,
        "n_tools": profile.n_tools,
        "histogram_bins": HISTOGRAM_BINS,
        "per_class": {
            class_map.name_of(c): {
                "min": st.minimum,
                "max": st.maximum,
                "mean": st.mean,
                "median": st.median,
                "std": st.std,
                "incidence": st.incidence,
                "histogram": list(st.histogram),
            }
            for c, st in profile.per_class.items()
        },
    }


def write_profile_json(profile: ProcessWearProfile, class_map: ClassMap, path) -> None:
    Path(path).write_text(
        json.dumps(profile_to_dict(profile, class_map), indent=2, sort_keys=True) + "\n"
    )


def write_summary_csv(
    summaries: list[WearSummary], class_map: ClassMap, path
) -> None:
    """One row per image; fraction columns per wear class."""
    classes = sorted(summaries[0].fractions) if summaries else []
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        header = ["image_id", "total_pixels", "counted_pixels"]
        for c in classes:
            name = class_map.name_of(c)
            header += [f"{name}_fraction", f"{name}_regions", f"{name}_largest_region"]
        header.append("wear_extent")
        writer.writerow(header)
        for s in sorted(summaries, key=lambda s: s.image_id):
            row = [s.image_id, s.total_pixels, s.counted_pixels]
            for c in classes:
                row += [
                    f"{s.fractions[c]:.6f}",
                    s.region_count[c],
                    s.largest_region_area[c],
                ]
            row.append("" if s.wear_extent is None else s.wear_extent)
            writer.writerow(row)
