"""Independent brute-force metric transcriptions used as test oracles.

Deliberately written with plain Python loops over pixels, sharing no code
with the library's vectorized counting, so the two paths can check each
other.
"""


def brute_force_dice(pairs, n_classes):
    """Pooled per-class Dice over (pred, gt) mask pairs.

    For each class c: 2 * sum_i pred_onehot(i,c)*gt_onehot(i,c) /
    (sum_i pred_onehot(i,c) + sum_i gt_onehot(i,c)), pixels pooled over
    all pairs; a class with empty denominator scores 1.
    """
    inter = [0] * n_classes
    pred_tot = [0] * n_classes
    gt_tot = [0] * n_classes
    for pred, gt in pairs:
        pred_rows = pred.labels.tolist()
        gt_rows = gt.labels.tolist()
        for prow, grow in zip(pred_rows, gt_rows):
            for p, g in zip(prow, grow):
                pred_tot[p] += 1
                gt_tot[g] += 1
                if p == g:
                    inter[p] += 1
    dice = []
    for c in range(n_classes):
        denom = pred_tot[c] + gt_tot[c]
        dice.append(1.0 if denom == 0 else 2.0 * inter[c] / denom)
    return dice


def brute_force_accuracy(pairs):
    correct = 0
    total = 0
    for pred, gt in pairs:
        for prow, grow in zip(pred.labels.tolist(), gt.labels.tolist()):
            for p, g in zip(prow, grow):
                total += 1
                if p == g:
                    correct += 1
    return correct / total
