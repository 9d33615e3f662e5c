"""Wear-mask analytics and life-cycle-assessment toolkit."""

from . import analytics, core, lca, metrics
from .core import (
    CLASS_MAPS,
    ClassDef,
    ClassMap,
    DatasetManifest,
    MACHINING_TOOL_CLASSES,
    ManifestRecord,
    ProbabilityMap,
    ProductFamily,
    ROTATING_ANODE_CLASSES,
    Role,
    SegmentationMask,
    SplitCounts,
    argmax_decode,
    class_map_for,
    load_manifest,
    load_mask,
    validate_manifest,
    write_mask,
)
from .metrics import class_dice, dataset_metrics, pixel_accuracy

__version__ = "0.1.0"

__all__ = [
    "CLASS_MAPS",
    "ClassDef",
    "ClassMap",
    "DatasetManifest",
    "MACHINING_TOOL_CLASSES",
    "ManifestRecord",
    "ProbabilityMap",
    "ProductFamily",
    "ROTATING_ANODE_CLASSES",
    "Role",
    "SegmentationMask",
    "SplitCounts",
    "analytics",
    "argmax_decode",
    "class_dice",
    "class_map_for",
    "core",
    "dataset_metrics",
    "lca",
    "load_manifest",
    "load_mask",
    "metrics",
    "pixel_accuracy",
    "validate_manifest",
    "write_mask",
]
