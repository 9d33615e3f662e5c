"""Core domain types: class taxonomies, segmentation masks, dataset manifests.

Masks are stored as 2D integer grids whose values index into a fixed
per-product-family class taxonomy. Two on-disk encodings are supported:
8-bit single-channel images (pixel value = class id) and a plain-text grid
of space-separated integers (one row per line), the latter mainly for
small test fixtures.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Optional

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import (
    ClassMapMismatch,
    DimensionMismatch,
    DuplicateImageId,
    LengthMismatch,
    MissingFile,
    UnknownClassId,
    UnreadableFile,
)


class ProductFamily(Enum):
    MACHINING_TOOL = "machining_tool"
    ROTATING_ANODE = "rotating_anode"


@dataclass(frozen=True)
class ClassDef:
    class_id: int
    name: str
    display_color: tuple[int, int, int]


@dataclass(frozen=True)
class ClassMap:
    """Ordered wear-class taxonomy for one product family."""

    family: ProductFamily
    classes: tuple[ClassDef, ...]

    def __post_init__(self):
        ids = [c.class_id for c in self.classes]
        if ids != list(range(len(ids))):
            raise ValueError("class ids must be contiguous from 0 and unique")

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.classes)

    def name_of(self, class_id: int) -> str:
        return self.classes[class_id].name

    @property
    def has_background(self) -> bool:
        return self.classes[0].name == "background"


MACHINING_TOOL_CLASSES = ClassMap(
    family=ProductFamily.MACHINING_TOOL,
    classes=(
        ClassDef(0, "background", (0, 0, 0)),
        ClassDef(1, "flank_wear", (220, 60, 60)),
        ClassDef(2, "chipping", (80, 200, 80)),
        ClassDef(3, "built_up_edge", (70, 110, 240)),
    ),
)

ROTATING_ANODE_CLASSES = ClassMap(
    family=ProductFamily.ROTATING_ANODE,
    classes=(
        ClassDef(0, "normal_surface", (150, 150, 150)),
        ClassDef(1, "cracks", (230, 180, 40)),
        ClassDef(2, "molten_area", (200, 40, 160)),
    ),
)

CLASS_MAPS = {
    ProductFamily.MACHINING_TOOL.value: MACHINING_TOOL_CLASSES,
    ProductFamily.ROTATING_ANODE.value: ROTATING_ANODE_CLASSES,
}


def class_map_for(name: str) -> ClassMap:
    try:
        return CLASS_MAPS[name]
    except KeyError:
        raise ClassMapMismatch(f"unknown class map {name!r}") from None


@dataclass(frozen=True)
class SegmentationMask:
    """A per-pixel class-id grid referencing a ClassMap.

    ``labels`` is a read-only 2D array of shape (height, width).
    """

    labels: np.ndarray
    class_map: ClassMap

    def __post_init__(self):
        labels = np.asarray(self.labels)
        if labels.ndim != 2:
            raise DimensionMismatch("labels must be a 2D grid")
        labels = np.ascontiguousarray(labels, dtype=np.uint8)
        bad = labels >= self.class_map.n_classes
        if bad.any():
            pos = np.argwhere(bad)[0]
            raise UnknownClassId(int(labels[tuple(pos)]), (int(pos[0]), int(pos[1])))
        labels.flags.writeable = False
        object.__setattr__(self, "labels", labels)

    @property
    def height(self) -> int:
        return self.labels.shape[0]

    @property
    def width(self) -> int:
        return self.labels.shape[1]

    @property
    def n_pixels(self) -> int:
        return self.labels.size

    def class_pixel_counts(self) -> np.ndarray:
        return np.bincount(self.labels.ravel(), minlength=self.class_map.n_classes)


@dataclass(frozen=True)
class ProbabilityMap:
    """Per-pixel class-score vectors, shape (height, width, n_classes).

    Scores need not be normalized; they only have to be finite.
    """

    scores: np.ndarray

    def __post_init__(self):
        scores = np.asarray(self.scores, dtype=np.float64)
        if scores.ndim != 3:
            raise DimensionMismatch("scores must have shape (H, W, n_classes)")
        if not np.isfinite(scores).all():
            raise ValueError("scores must be finite")
        scores.flags.writeable = False
        object.__setattr__(self, "scores", scores)

    @property
    def height(self) -> int:
        return self.scores.shape[0]

    @property
    def width(self) -> int:
        return self.scores.shape[1]

    @property
    def n_channels(self) -> int:
        return self.scores.shape[2]


def argmax_decode(probs: ProbabilityMap, class_map: ClassMap) -> SegmentationMask:
    """Hard-label a score map; ties break toward the lowest class id."""
    if probs.n_channels != class_map.n_classes:
        raise LengthMismatch(
            f"score vectors have length {probs.n_channels}, "
            f"class map has {class_map.n_classes} classes"
        )
    labels = np.argmax(probs.scores, axis=2).astype(np.uint8)
    return SegmentationMask(labels=labels, class_map=class_map)


# ---------------------------------------------------------------------------
# mask I/O


def load_mask(path, class_map: ClassMap) -> SegmentationMask:
    """Load a mask from an 8-bit image file or a plain-text grid file."""
    path = Path(path)
    if not path.exists():
        raise UnreadableFile(f"no such file: {path}")
    if path.suffix.lower() == ".txt":
        labels = _read_text_grid(path)
    else:
        try:
            with Image.open(path) as img:
                if img.mode not in ("L", "P", "I", "I;16"):
                    img = img.convert("L")
                labels = np.asarray(img)
        except (UnidentifiedImageError, OSError) as exc:
            raise UnreadableFile(f"cannot decode {path}: {exc}") from exc
        if labels.ndim != 2:
            raise UnreadableFile(f"{path} is not single-channel")
    try:
        return SegmentationMask(labels=labels, class_map=class_map)
    except UnknownClassId as exc:
        raise UnknownClassId(exc.value, exc.position) from None


def _read_text_grid(path: Path) -> np.ndarray:
    rows = []
    try:
        text = path.read_text()
    except OSError as exc:
        raise UnreadableFile(str(exc)) from exc
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise UnreadableFile(f"non-integer token in {path}") from exc
    if not rows:
        raise UnreadableFile(f"{path} contains no grid rows")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise DimensionMismatch(f"ragged rows in {path}")
    arr = np.array(rows)
    if arr.min() < 0 or arr.max() > 255:
        bad = np.argwhere((arr < 0) | (arr > 255))[0]
        raise UnknownClassId(int(arr[tuple(bad)]), (int(bad[0]), int(bad[1])))
    return arr.astype(np.uint8)


def write_mask(mask: SegmentationMask, path) -> None:
    """Write a mask; format chosen by suffix (.txt grid, else 8-bit image)."""
    path = Path(path)
    if path.suffix.lower() == ".txt":
        lines = [" ".join(str(int(v)) for v in row) for row in mask.labels]
        path.write_text("\n".join(lines) + "\n")
    else:
        Image.fromarray(mask.labels, mode="L").save(path)


# ---------------------------------------------------------------------------
# dataset manifests


class Role(Enum):
    TRAIN = "train"
    VALIDATION = "validation"
    TEST = "test"


@dataclass(frozen=True)
class ManifestRecord:
    image_id: str
    role: Role
    gt: Path
    pred: Optional[Path] = None
    patch_offset: Optional[tuple[int, int]] = None
    track_id: Optional[str] = None


@dataclass(frozen=True)
class SplitCounts:
    train: int
    validation: int
    test: int

    @property
    def total(self) -> int:
        return self.train + self.validation + self.test


@dataclass(frozen=True)
class DatasetManifest:
    class_map: ClassMap
    records: tuple[ManifestRecord, ...] = field(default_factory=tuple)


def load_manifest(path) -> DatasetManifest:
    """Parse a manifest JSON document; mask paths resolve relative to it."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UnreadableFile(f"cannot parse manifest {path}: {exc}") from exc
    class_map = class_map_for(doc.get("class_map", ""))
    base = path.parent
    records = []
    for rec in doc.get("records", []):
        offset = rec.get("patch_offset")
        records.append(
            ManifestRecord(
                image_id=str(rec["image_id"]),
                role=Role(rec["role"]),
                gt=base / rec["gt"],
                pred=(base / rec["pred"]) if rec.get("pred") else None,
                patch_offset=tuple(offset) if offset is not None else None,
                track_id=rec.get("track_id"),
            )
        )
    return DatasetManifest(class_map=class_map, records=tuple(records))


def validate_manifest(manifest: DatasetManifest) -> SplitCounts:
    """Check manifest invariants and return per-role record counts.

    Every referenced mask file must exist and decode under the manifest's
    ClassMap; image ids must be unique. Raises on the first violation.
    """
    seen = set()
    counts = {Role.TRAIN: 0, Role.VALIDATION: 0, Role.TEST: 0}
    for rec in manifest.records:
        if rec.image_id in seen:
            raise DuplicateImageId(rec.image_id)
        seen.add(rec.image_id)
        for p in (rec.gt, rec.pred):
            if p is None:
                continue
            if not Path(p).exists():
                raise MissingFile(f"{rec.image_id}: missing mask file {p}")
            try:
                load_mask(p, manifest.class_map)
            except UnknownClassId as exc:
                raise ClassMapMismatch(
                    f"{rec.image_id}: {p} does not fit class map "
                    f"{manifest.class_map.family.value} ({exc})"
                ) from exc
        counts[rec.role] += 1
    return SplitCounts(
        train=counts[Role.TRAIN],
        validation=counts[Role.VALIDATION],
        test=counts[Role.TEST],
    )
