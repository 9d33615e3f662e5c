#!/usr/bin/env python3
"""Construct the shipped metric fixture corpora.

For each product family a small corpus of (prediction, ground-truth) mask
pairs is synthesized whose POOLED per-class Dice values equal the target
table exactly:

  machining: background 0.991, flank wear 0.695, chipping 0.244,
             built-up edge 0.596  ->  mean 0.6315, accuracy 0.977
  anode:     normal surface 0.485, cracks 0.634, molten area 0.690
             ->  mean 0.603, accuracy 0.603

Construction: per class c pick |P_c| = |G_c| = half of a fixed denominator
S_c and intersection I_c = dice_c * S_c / 2 (integral because the targets
have three decimals and S_c is a multiple of 2000). The per-class counts
are realized as one confusion matrix with matching row/column sums, whose
cells are then laid out pixel by pixel, shuffled with a fixed seed, and
chopped into equal-size mask images.

Outputs are written to tests/fixtures/metrics/{machining,anode}/ with a
manifest.json per corpus; rerunning is deterministic and idempotent.
"""

import json
import sys
from pathlib import Path

import numpy as np

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from wearlca.core import (  # noqa: E402
    MACHINING_TOOL_CLASSES,
    ROTATING_ANODE_CLASSES,
    SegmentationMask,
    write_mask,
)

OUT_ROOT = REPO / "tests" / "fixtures" / "metrics"

# (family dir, class map, per-class dice targets, per-class denominator
#  S_c = |P_c| + |G_c|, images (count, height, width))
CORPORA = [
    (
        "machining",
        MACHINING_TOOL_CLASSES,
        [0.991, 0.695, 0.244, 0.596],
        [200000, 2000, 2000, 2000],
        (5, 103, 200),
    ),
    (
        "anode",
        ROTATING_ANODE_CLASSES,
        [0.485, 0.634, 0.690],
        [2000, 2000, 2000],
        (3, 25, 40),
    ),
]


def build_confusion(dice, denoms):
    """Confusion matrix (rows gt, cols pred) hitting the dice targets."""
    n = len(dice)
    totals = [s // 2 for s in denoms]  # |P_c| = |G_c|
    diag = []
    for d, s in zip(dice, denoms):
        inter = d * s / 2.0
        assert abs(inter - round(inter)) < 1e-9, "targets must be 3-decimal exact"
        diag.append(int(round(inter)))
    cm = np.zeros((n, n), dtype=np.int64)
    for c in range(n):
        cm[c, c] = diag[c]
    row_excess = [totals[c] - diag[c] for c in range(n)]
    col_deficit = list(row_excess)
    assert max(row_excess) <= sum(row_excess) - max(row_excess), (
        "off-diagonal fill infeasible for these targets"
    )
    # fill the zero-diagonal off-diagonal cells via a transportation flow
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import maximum_flow

    total = sum(row_excess)
    size = 2 * n + 2
    source, sink = 0, 2 * n + 1
    cap = np.zeros((size, size), dtype=np.int64)
    for i in range(n):
        cap[source, 1 + i] = row_excess[i]
        cap[1 + n + i, sink] = col_deficit[i]
        for j in range(n):
            if i != j:
                cap[1 + i, 1 + n + j] = total
    result = maximum_flow(csr_matrix(cap), source, sink)
    assert result.flow_value == total, "off-diagonal fill infeasible"
    flow = result.flow.toarray()
    for i in range(n):
        for j in range(n):
            if i != j:
                cm[i, j] += flow[1 + i, 1 + n + j]
    assert all(int(cm[c].sum()) == totals[c] for c in range(n))
    assert all(int(cm[:, c].sum()) == totals[c] for c in range(n))
    return cm


def layout_masks(cm, images, seed):
    """Expand confusion cells into pixel arrays and chop into images."""
    n_images, h, w = images
    gt_flat, pred_flat = [], []
    for g in range(cm.shape[0]):
        for p in range(cm.shape[1]):
            k = int(cm[g, p])
            gt_flat.extend([g] * k)
            pred_flat.extend([p] * k)
    gt_flat = np.array(gt_flat, dtype=np.uint8)
    pred_flat = np.array(pred_flat, dtype=np.uint8)
    assert gt_flat.size == n_images * h * w, (gt_flat.size, n_images * h * w)
    rng = np.random.default_rng(seed)
    order = rng.permutation(gt_flat.size)
    gt_flat, pred_flat = gt_flat[order], pred_flat[order]
    pairs = []
    per = h * w
    for i in range(n_images):
        sl = slice(i * per, (i + 1) * per)
        pairs.append((gt_flat[sl].reshape(h, w), pred_flat[sl].reshape(h, w)))
    return pairs


def write_corpus(name, class_map, dice, denoms, images, seed):
    out = OUT_ROOT / name
    out.mkdir(parents=True, exist_ok=True)
    cm = build_confusion(dice, denoms)
    pairs = layout_masks(cm, images, seed)
    records = []
    for i, (gt, pred) in enumerate(pairs):
        gt_name, pred_name = f"gt_{i:03d}.png", f"pred_{i:03d}.png"
        write_mask(SegmentationMask(gt, class_map), out / gt_name)
        write_mask(SegmentationMask(pred, class_map), out / pred_name)
        records.append(
            {"image_id": f"{name}_{i:03d}", "role": "test", "gt": gt_name, "pred": pred_name}
        )
    manifest = {"class_map": class_map.family.value, "records": records}
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    mean = sum(dice) / len(dice)
    print(f"{name}: {len(pairs)} pairs, per-class dice {dice}, mean {mean}")


def main():
    for seed, (name, class_map, dice, denoms, images) in enumerate(CORPORA, start=7):
        write_corpus(name, class_map, dice, denoms, images, seed)


if __name__ == "__main__":
    main()
