"""Segmentation evaluation metrics: per-class Dice, mean DSC, pixel accuracy.

Per-class Dice is computed over pooled pixel counts across the whole test
set by default (micro over pixels, macro over classes); a per-image macro
mode is available as well. A class that occurs in neither prediction nor
ground truth gets Dice 1 and is flagged ``absent``.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .core import ClassMap, SegmentationMask
from .errors import DimensionMismatch, EmptyInput, UnknownClass

MaskPair = tuple[SegmentationMask, SegmentationMask]  # (pred, gt)


@dataclass(frozen=True)
class MetricReport:
    class_map: ClassMap
    per_class_dice: dict[int, float]
    mean_dsc: float
    pixel_accuracy: float
    confusion: np.ndarray  # rows = ground truth, cols = prediction
    pred_totals: np.ndarray
    gt_totals: np.ndarray
    absent_classes: frozenset[int]
    mode: str  # "pooled" or "per_image"
    n_pairs: int


def _check_pair(pred: SegmentationMask, gt: SegmentationMask) -> None:
    if pred.labels.shape != gt.labels.shape:
        raise DimensionMismatch(
            f"pred {pred.labels.shape} vs gt {gt.labels.shape}"
        )
    if pred.class_map is not gt.class_map and pred.class_map != gt.class_map:
        raise DimensionMismatch("pred and gt reference different class maps")


def confusion_matrix(pred: SegmentationMask, gt: SegmentationMask) -> np.ndarray:
    """|C|x|C| count matrix; entry (g, p) counts pixels with gt g, pred p."""
    _check_pair(pred, gt)
    n = gt.class_map.n_classes
    idx = gt.labels.ravel().astype(np.int64) * n + pred.labels.ravel()
    return np.bincount(idx, minlength=n * n).reshape(n, n)


def class_dice(pred: SegmentationMask, gt: SegmentationMask, c: int) -> float:
    """Dice overlap for one class: 2|P∩G| / (|P| + |G|); 1 if both empty."""
    _check_pair(pred, gt)
    if not 0 <= c < gt.class_map.n_classes:
        raise UnknownClass(f"class {c} not in class map")
    p = pred.labels == c
    g = gt.labels == c
    denom = int(p.sum()) + int(g.sum())
    if denom == 0:
        return 1.0
    return 2.0 * int((p & g).sum()) / denom


def _dice_from_counts(intersection, pred_tot, gt_tot):
    denom = pred_tot + gt_tot
    if denom == 0:
        return 1.0
    return 2.0 * intersection / denom


def pixel_accuracy(pairs: list[MaskPair]) -> float:
    """Fraction of matching pixels pooled over all pairs."""
    if not pairs:
        raise EmptyInput("no mask pairs")
    correct = 0
    total = 0
    for pred, gt in pairs:
        _check_pair(pred, gt)
        correct += int((pred.labels == gt.labels).sum())
        total += pred.n_pixels
    return correct / total


def dataset_metrics(
    pairs: list[MaskPair], class_map: ClassMap, mode: str = "pooled"
) -> MetricReport:
    """Aggregate metrics over a test set of (pred, gt) pairs.

    ``pooled`` pools pixel counts per class over all pairs before forming
    each Dice ratio; ``per_image`` averages per-image Dice values instead.
    The confusion matrix and pixel accuracy are always pooled counts.
    """
    if not pairs:
        raise EmptyInput("no mask pairs")
    if mode not in ("pooled", "per_image"):
        raise ValueError(f"unknown mode {mode!r}")
    n = class_map.n_classes
    confusion = np.zeros((n, n), dtype=np.int64)
    per_image = np.zeros((len(pairs), n), dtype=np.float64)
    for k, (pred, gt) in enumerate(pairs):
        if pred.class_map != class_map:
            raise DimensionMismatch("pair does not use the requested class map")
        cm = confusion_matrix(pred, gt)
        confusion += cm
        if mode == "per_image":
            inter = np.diag(cm)
            pt, gt_tot = cm.sum(axis=0), cm.sum(axis=1)
            per_image[k] = [
                _dice_from_counts(int(inter[c]), int(pt[c]), int(gt_tot[c]))
                for c in range(n)
            ]
    pred_totals = confusion.sum(axis=0)
    gt_totals = confusion.sum(axis=1)
    absent = frozenset(
        int(c) for c in range(n) if pred_totals[c] == 0 and gt_totals[c] == 0
    )
    if mode == "pooled":
        per_class = {
            c: _dice_from_counts(
                int(confusion[c, c]), int(pred_totals[c]), int(gt_totals[c])
            )
            for c in range(n)
        }
    else:
        per_class = {c: float(per_image[:, c].mean()) for c in range(n)}
    mean_dsc = sum(per_class.values()) / n
    accuracy = float(np.trace(confusion)) / float(confusion.sum())
    return MetricReport(
        class_map=class_map,
        per_class_dice=per_class,
        mean_dsc=mean_dsc,
        pixel_accuracy=accuracy,
        confusion=confusion,
        pred_totals=pred_totals,
        gt_totals=gt_totals,
        absent_classes=absent,
        mode=mode,
        n_pairs=len(pairs),
    )


# ---------------------------------------------------------------------------
# report serialization


def report_to_dict(report: MetricReport) -> dict:
    cm = report.class_map
    return {
        "class_map": cm.family.value,
        "mode": report.mode,
        "n_pairs": report.n_pairs,
        "per_class_dice": {
            cm.name_of(c): report.per_class_dice[c] for c in sorted(report.per_class_dice)
        },
        "absent_classes": sorted(cm.name_of(c) for c in report.absent_classes),
        "mean_dsc": report.mean_dsc,
        "pixel_accuracy": report.pixel_accuracy,
        "confusion": report.confusion.tolist(),
        "pred_totals": report.pred_totals.tolist(),
        "gt_totals": report.gt_totals.tolist(),
    }


def write_report_json(report: MetricReport, path) -> None:
    Path(path).write_text(
        json.dumps(report_to_dict(report), indent=2, sort_keys=True) + "\n"
    )


def write_report_csv(report: MetricReport, path) -> None:
    """One row per class; ratios rendered to 3 decimals for table parity."""
    cm = report.class_map
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["class_id", "class_name", "dice", "pred_pixels", "gt_pixels", "absent"])
        for c in sorted(report.per_class_dice):
            writer.writerow(
                [
                    c,
                    cm.name_of(c),
                    f"{report.per_class_dice[c]:.3f}",
                    int(report.pred_totals[c]),
                    int(report.gt_totals[c]),
                    "yes" if c in report.absent_classes else "no",
                ]
            )
        writer.writerow(["", "mean_dsc", f"{report.mean_dsc:.3f}", "", "", ""])
        writer.writerow(["", "pixel_accuracy", f"{report.pixel_accuracy:.3f}", "", "", ""])
